#include "qmcnet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qmcnet/acceptance.hpp"
#include "qmcnet/constructions.hpp"
#include "qmcnet/discrepancy.hpp"
#include "qmcnet/dual.hpp"
#include "qmcnet/errors.hpp"
#include "qmcnet/metrics.hpp"
#include "qmcnet/point_io.hpp"
#include "qmcnet/walsh.hpp"

namespace qmcnet::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 26;
constexpr double kCharTolerance = 1e-9;
constexpr std::size_t kNonDualSamples = 100;

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
void read_optional(const json& j, std::optional<T>& v) {
  if (j.is_null()) {
    v.reset();
  } else {
    v = j.get<T>();
  }
}

bool is_net_family(const std::string& family) {
  return family == "van-der-corput" || family == "faure" || family == "chen-skriganov" ||
         family == "niederreiter" || family == "dp-net";
}

void require_family(const RunConfig& config) {
  if (config.family.empty()) throw ParameterError("--family is required");
  const auto& all = families();
  if (std::find(all.begin(), all.end(), config.family) == all.end()) {
    throw ParameterError("unknown family '" + config.family + "'");
  }
}

void require_base_two(const RunConfig& config) {
  if (config.b != 2) throw ParameterError(config.family + " is defined over F_2; --b must be 2");
}

std::size_t alpha_or_default(const RunConfig& config) {
  if (config.alpha) return *config.alpha;
  if (config.family == "dp-net" ) return 3;
  if (config.family == "chen-skriganov") return 2;
  return 1;
}

std::uint64_t required_n(const RunConfig& config) {
  if (!config.n) throw ParameterError("--N is required for family " + config.family);
  return *config.n;
}

std::string family_params(const RunConfig& c) {
  const auto k = [](const char* key, auto v) { return std::string(key) + "=" + std::to_string(v); };
  if (c.family == "van-der-corput") return k("b", c.b) + ";" + k("m", c.m);
  if (c.family == "faure") return k("b", c.b) + ";" + k("m", c.m) + ";" + k("s", c.s);
  if (c.family == "chen-skriganov") {
    std::string p = k("b", c.b) + ";" + k("alpha", alpha_or_default(c)) + ";" + k("m", c.m) + ";" + k("s", c.s);
    if (!c.betas.empty()) {
      std::string betas = c.betas;
      std::replace(betas.begin(), betas.end(), ';', '/');
      std::replace(betas.begin(), betas.end(), ',', ':');
      p += ";betas=" + betas;
    }
    return p;
  }
  if (c.family == "niederreiter") return k("m", c.m) + ";" + k("s", c.s);
  if (c.family == "dp-net") return k("alpha", alpha_or_default(c)) + ";" + k("m", c.m) + ";" + k("s", c.s);
  if (c.family == "dp-finite" || c.family == "dp-sequence") return k("N", required_n(c)) + ";" + k("s", c.s);
  if (c.family == "davenport") return k("M", c.big_m.value_or(16)) + ";cf=golden";
  return "";
}

// Opens config.out when set; otherwise returns `fallback`.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

PointSet load_or_build(const RunConfig& config) {
  if (!config.in.empty()) return read_point_file(std::filesystem::path(config.in));
  return build_points(config);
}

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

// ---- verify ----

struct CheckRow {
  std::string check;
  std::string status;  // pass | fail | capacity | skipped
  std::string value;
  std::string threshold;
  std::string detail;
};

std::vector<std::string> default_checks(const RunConfig& config) {
  if (!config.in.empty()) return {"geometric"};
  if (config.family == "chen-skriganov") return {"tvalue", "geometric", "hamming", "nrt", "char"};
  if (config.family == "dp-net") return {"tvalue", "nrt", "order-alpha", "char"};
  if (is_net_family(config.family)) return {"tvalue", "geometric", "nrt", "char"};
  return {"geometric"};
}

std::optional<std::size_t> expected_t(const RunConfig& config) {
  if (config.t) return config.t;
  if (config.family == "van-der-corput" || config.family == "faure" || config.family == "chen-skriganov") return 0;
  if (config.family == "niederreiter") return niederreiter_t_bound(niederreiter_params(config.s));
  return std::nullopt;
}

std::string witness_string(const std::vector<std::uint64_t>& w) {
  std::string out;
  for (std::size_t j = 0; j < w.size(); ++j) out += (j ? ";" : "") + std::to_string(w[j]);
  return out;
}

CheckRow run_check(const std::string& check, const RunConfig& config,
                   const std::optional<GeneratingMatrixSet>& matrices, const PointSet& points) {
  CheckRow row{check, "pass", "", "", ""};
  const auto need_matrices = [&] {
    if (!matrices) throw PreconditionError("check '" + check + "' needs generating matrices (use --family)");
    return *matrices;
  };

  if (check == "tvalue") {
    const auto c = need_matrices();
    const auto t = compute_t_value(c);
    row.value = std::to_string(t);
    if (const auto expected = expected_t(config)) {
      row.threshold = "<=" + std::to_string(*expected);
      if (t > *expected) row.status = "fail";
    } else {
      row.detail = "no expected t for this family";
    }
  } else if (check == "geometric") {
    std::size_t t = 0;
    if (config.t) {
      t = *config.t;
    } else if (matrices) {
      t = compute_t_value(*matrices);
    }
    row.threshold = "t=" + std::to_string(t);
    const bool ok = geometric_net_check(points, t);
    row.value = ok ? "true" : "false";
    if (!ok) row.status = "fail";
  } else if (check == "hamming") {
    const auto c = need_matrices();
    const DualSpace dual(c, config.cap);
    const auto profile = min_dual_weight(dual, WeightSpec::hamming(), dual.coordinate_bound());
    row.value = profile.minimum ? std::to_string(*profile.minimum) : "inf";
    row.detail = "witness=" + witness_string(profile.witness) + " dual_size=" + std::to_string(dual.size());
    std::optional<std::size_t> threshold;
    if (config.min) {
      threshold = *config.min;
    } else if (config.family == "chen-skriganov") {
      threshold = alpha_or_default(config) + 1;
    }
    if (threshold) {
      row.threshold = ">=" + std::to_string(*threshold);
      if (profile.minimum && *profile.minimum < *threshold) row.status = "fail";
    }
  } else if (check == "nrt") {
    const auto c = need_matrices();
    const DualSpace dual(c, config.cap);
    const auto profile = min_dual_weight(dual, WeightSpec::nrt());
    const auto t = compute_t_value(c);
    const auto expected = c.cols() - t + 1;
    row.value = profile.minimum ? std::to_string(*profile.minimum) : "inf";
    row.threshold = "==" + std::to_string(expected);
    row.detail = "witness=" + witness_string(profile.witness);
    if (!profile.minimum || *profile.minimum != expected) row.status = "fail";
  } else if (check == "order-alpha") {
    if (config.family != "dp-net") throw PreconditionError("order-alpha applies to family dp-net");
    const auto c = need_matrices();
    const auto alpha = alpha_or_default(config);
    const auto t_base = niederreiter_t_bound(niederreiter_params(alpha * config.s));
    const auto result = check_order_alpha(c, alpha, config.m, t_base, config.cap);
    row.value = result.profile.minimum ? std::to_string(*result.profile.minimum) : "inf";
    row.threshold = ">=" + std::to_string(result.bound);
    row.detail = "t_base=" + std::to_string(t_base);
    if (!result.pass) row.status = "fail";
  } else if (check == "char") {
    const auto c = need_matrices();
    const DualSpace dual(c, config.cap);
    if (dual.size() > config.cap / std::max<std::uint64_t>(1, points.size())) {
      throw CapacityError("character check needs dual_size * N <= cap");
    }
    double worst = 0.0;
    dual.for_each([&](std::span<const std::uint64_t> k) {
      worst = std::max(worst, std::abs(char_property_sum(points, k) - 1.0));
    });
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::uint64_t> coord(0, dual.coordinate_bound() - 1);
    std::vector<std::uint64_t> k(c.dim());
    std::size_t tested = 0;
    for (std::size_t attempt = 0; tested < kNonDualSamples && attempt < 100 * kNonDualSamples; ++attempt) {
      for (auto& v : k) v = coord(rng);
      if (dual.contains(k)) continue;
      worst = std::max(worst, std::abs(char_property_sum(points, k)));
      ++tested;
    }
    row.value = format_double(worst);
    row.threshold = "<=" + format_double(kCharTolerance);
    row.detail = "dual=" + std::to_string(dual.size()) + " non_dual=" + std::to_string(tested);
    if (worst > kCharTolerance) row.status = "fail";
  } else {
    throw ParameterError("unknown check '" + check + "'");
  }
  return row;
}

// ---- scaling ----

struct ScalingRow {
  std::uint64_t n = 0;
  std::string params;
  double value = 0.0;
  double ratio = 0.0;
  double roth = 0.0;
  std::string status = "ok";
};

double log_shape(std::uint64_t n, std::size_t s) {
  const double nd = static_cast<double>(n);
  return std::pow(std::log(nd), (static_cast<double>(s) - 1.0) / 2.0) *
         std::sqrt(static_cast<double>(sum_of_digits(n)));
}

}  // namespace

std::string to_json(const RunConfig& c) {
  json j = {
      {"command", c.command},   {"family", c.family},   {"b", c.b},
      {"m", c.m},               {"s", c.s},             {"alpha", optional_json(c.alpha)},
      {"N", optional_json(c.n)}, {"M", optional_json(c.big_m)}, {"q", c.q},
      {"samples", c.samples},   {"seed", c.seed},       {"threads", c.threads},
      {"cap", c.cap},           {"out", c.out},         {"in", c.in},
      {"checks", c.checks},     {"betas", c.betas},     {"t", optional_json(c.t)},
      {"min", optional_json(c.min)}, {"max", optional_json(c.max)},
  };
  return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "command") c.command = v.get<std::string>();
      else if (key == "family") c.family = v.get<std::string>();
      else if (key == "b") c.b = v.get<std::uint32_t>();
      else if (key == "m") c.m = v.get<std::size_t>();
      else if (key == "s") c.s = v.get<std::size_t>();
      else if (key == "alpha") read_optional(v, c.alpha);
      else if (key == "N") read_optional(v, c.n);
      else if (key == "M") read_optional(v, c.big_m);
      else if (key == "q") c.q = v.get<double>();
      else if (key == "samples") c.samples = v.get<std::size_t>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "threads") c.threads = v.get<std::size_t>();
      else if (key == "cap") c.cap = v.get<std::uint64_t>();
      else if (key == "out") c.out = v.get<std::string>();
      else if (key == "in") c.in = v.get<std::string>();
      else if (key == "checks") c.checks = v.get<std::vector<std::string>>();
      else if (key == "betas") c.betas = v.get<std::string>();
      else if (key == "t") read_optional(v, c.t);
      else if (key == "min") read_optional(v, c.min);
      else if (key == "max") read_optional(v, c.max);
      else throw ParameterError("unknown config key '" + key + "'");
    } catch (const json::exception& e) {
      throw ParameterError("config key '" + key + "': " + e.what());
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

const std::vector<std::string>& families() {
  static const std::vector<std::string> all = {"van-der-corput", "faure",     "chen-skriganov",
                                               "niederreiter",   "dp-net",    "dp-finite",
                                               "dp-sequence",    "davenport"};
  return all;
}

const std::vector<std::string>& verify_checks() {
  static const std::vector<std::string> all = {"tvalue", "geometric", "hamming", "nrt", "order-alpha", "char"};
  return all;
}

std::vector<std::vector<std::uint32_t>> parse_betas(const std::string& text) {
  std::vector<std::vector<std::uint32_t>> rows;
  if (text.empty()) return rows;
  std::stringstream rows_in(text);
  for (std::string row; std::getline(rows_in, row, ';');) {
    std::vector<std::uint32_t> values;
    std::stringstream values_in(row);
    for (std::string tok; std::getline(values_in, tok, ',');) {
      try {
        std::size_t used = 0;
        const auto v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        values.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::exception&) {
        throw ParameterError("--betas: '" + tok + "' is not a nonnegative integer");
      }
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

std::optional<GeneratingMatrixSet> build_matrices(const RunConfig& config) {
  require_family(config);
  const auto& f = config.family;
  if (f == "van-der-corput") return van_der_corput_matrices(config.b, config.m);
  if (f == "faure") return faure_matrices(config.b, config.m, config.s);
  if (f == "chen-skriganov") {
    return cs_matrices({config.b, alpha_or_default(config), config.m, config.s, parse_betas(config.betas)});
  }
  if (f == "niederreiter") {
    require_base_two(config);
    return niederreiter_matrices(niederreiter_params(config.s), config.m, config.m);
  }
  if (f == "dp-net") {
    require_base_two(config);
    return dp_net_matrices(alpha_or_default(config), config.m, config.s);
  }
  return std::nullopt;
}

PointSet build_points(const RunConfig& config) {
  require_family(config);
  const auto& f = config.family;
  Provenance prov{f, family_params(config)};
  if (const auto c = build_matrices(config)) {
    const auto size = checked_pow(c->base(), c->cols());
    if (!size || *size > kMaxPoints) throw CapacityError("net has more than 2^26 points");
    return generate_net_points(*c, prov);
  }
  PointSet points = [&] {
    if (f == "dp-finite") {
      require_base_two(config);
      return dp_finite_pointset(required_n(config), config.s);
    }
    if (f == "dp-sequence") {
      require_base_two(config);
      return dp_sequence(config.s, required_n(config));
    }
    return davenport_symmetrized(ContinuedFraction::golden_ratio(), config.big_m.value_or(16));
  }();
  points.set_provenance(prov);
  return points;
}

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto matrices = build_matrices(config);
  const PointSet points = build_points(config);
  if (matrices && (config.family == "chen-skriganov" || config.family == "faure")) {
    for (std::size_t j = 0; j < matrices->dim(); ++j) {
      err << "C_" << j + 1 << ":\n" << matrices->matrix(j);
    }
  }
  OutputTarget target(config.out, out);
  write_point_file(target.get(), points);
  err << "wrote " << points.size() << " points";
  if (!config.out.empty() && config.out != "-") err << " to " << config.out;
  err << '\n';
  return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<GeneratingMatrixSet> matrices;
  if (config.in.empty()) matrices = build_matrices(config);
  const PointSet points = load_or_build(config);
  const auto checks = config.checks.empty() ? default_checks(config) : config.checks;
  for (const auto& check : checks) {
    const auto& known = verify_checks();
    if (std::find(known.begin(), known.end(), check) == known.end()) {
      throw ParameterError("unknown check '" + check + "'");
    }
  }

  OutputTarget target(config.out, out);
  auto& os = target.get();
  os << "check,status,value,threshold,detail\n";
  bool failed = false, capacity = false;
  for (const auto& check : checks) {
    CheckRow row;
    try {
      row = run_check(check, config, matrices, points);
    } catch (const CapacityError& e) {
      row = {check, "capacity", "", "", csv_safe(e.what())};
    }
    failed |= row.status == "fail";
    capacity |= row.status == "capacity";
    os << row.check << ',' << row.status << ',' << row.value << ',' << row.threshold << ','
       << csv_safe(row.detail) << '\n';
  }
  if (failed) {
    err << "verification failed\n";
    return kVerificationFailure;
  }
  if (capacity) {
    err << "enumeration cap exceeded; raise --cap\n";
    return kCapacityError;
  }
  return kSuccess;
}

int cmd_discrepancy(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PointSet points = load_or_build(config);
  if (points.empty()) throw PreconditionError("point set is empty");
  OutputTarget target(config.out, out);
  auto& os = target.get();
  write_report_header(os);
  write_report_row(os, l2_exact(points, config.threads));
  if (config.q != 2.0) {
    write_report_row(os, lq_estimate(points, config.q, {config.samples, config.seed, config.threads}));
  }
  err << "N=" << points.size() << " s=" << points.dim() << '\n';
  return kSuccess;
}

int cmd_scaling(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_family(config);
  const auto& f = config.family;
  std::vector<ScalingRow> rows;
  std::string ratio_kind;

  const auto measure = [&](ScalingRow& row, const PointSet& p, double shape) {
    row.n = p.size();
    row.params = p.provenance().params;
    row.value = std::sqrt(l2_squared(p, config.threads));
    row.ratio = static_cast<double>(row.n) * row.value / shape;
    row.roth = roth_ratio(row.value, row.n, p.dim(), 2.0);
  };
  const auto guarded = [&](ScalingRow row, const std::function<void(ScalingRow&)>& body) {
    try {
      body(row);
    } catch (const std::exception& e) {
      row.status = "error: " + csv_safe(e.what());
    }
    rows.push_back(std::move(row));
  };

  if (is_net_family(f)) {
    ratio_kind = "N*L2/m^((s-1)/2)";
    const std::uint64_t lo = config.min.value_or(config.m), hi = config.max.value_or(config.m);
    for (std::uint64_t m = lo; m <= hi; ++m) {
      guarded({}, [&](ScalingRow& row) {
        RunConfig c = config;
        c.m = m;
        row.params = family_params(c);
        const auto p = build_points(c);
        measure(row, p, std::pow(static_cast<double>(m), (static_cast<double>(p.dim()) - 1.0) / 2.0));
      });
    }
  } else if (f == "dp-finite") {
    ratio_kind = "N*L2/((log N)^((s-1)/2)*sqrt(S(N)))";
    const std::uint64_t lo = config.min ? *config.min : required_n(config), hi = config.max.value_or(lo);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      guarded({}, [&](ScalingRow& row) {
        RunConfig c = config;
        c.n = n;
        row.params = family_params(c);
        const auto p = build_points(c);
        measure(row, p, log_shape(n, p.dim()));
      });
    }
  } else if (f == "dp-sequence") {
    ratio_kind = "N*L2/((log N)^((s-1)/2)*sqrt(S(N)))";
    const std::uint64_t n_max = config.max ? *config.max : required_n(config);
    const std::uint64_t lo = config.min.value_or(2);
    try {
      const auto seq = dp_sequence(config.s, n_max);
      const auto profile = sequence_profile(seq, 2.0);
      for (const auto& r : profile.rows) {
        if (r.n < lo) continue;
        ScalingRow row;
        row.n = r.n;
        row.params = "N=" + std::to_string(r.n) + ";s=" + std::to_string(config.s);
        row.value = r.value;
        row.ratio = r.ratio;
        row.roth = roth_ratio(r.value, r.n, config.s, 2.0);
        rows.push_back(row);
      }
    } catch (const CapacityError&) {
      throw;
    } catch (const std::exception& e) {
      ScalingRow row;
      row.status = "error: " + csv_safe(e.what());
      rows.push_back(row);
    }
  } else {
    ratio_kind = "N*L2/sqrt(log N)";
    const std::uint64_t lo = config.min.value_or(2), hi = config.max.value_or(1024);
    if (lo == 0) throw ParameterError("--min must be positive for davenport");
    for (std::uint64_t big_m = lo; big_m <= hi; big_m *= 2) {
      guarded({}, [&](ScalingRow& row) {
        RunConfig c = config;
        c.big_m = big_m;
        row.params = family_params(c);
        const auto p = build_points(c);
        measure(row, p, std::sqrt(std::log(static_cast<double>(p.size()))));
      });
    }
  }

  OutputTarget target(config.out, out);
  auto& os = target.get();
  os << "family,params,N,s,value,scaled,ratio,ratio_kind,roth_ratio,status\n";
  for (const auto& r : rows) {
    os << f << ',' << r.params << ',' << r.n << ',' << config.s << ',' << format_double(r.value) << ','
       << format_double(static_cast<double>(r.n) * r.value) << ',' << format_double(r.ratio) << ','
       << ratio_kind << ',' << format_double(r.roth) << ',' << r.status << '\n';
  }
  err << rows.size() << " rows\n";
  return kSuccess;
}

int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream&) {
  AcceptanceOptions options;
  options.threads = config.threads;
  options.on_result = [&](const CriterionResult& r) { print_criterion(out, r); };
  const auto results = run_acceptance(options);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  out << (ok ? "all criteria passed" : "some criteria failed") << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "construct") return cmd_construct(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "discrepancy") return cmd_discrepancy(config, out, err);
    if (config.command == "scaling") return cmd_scaling(config, out, err);
    if (config.command == "selftest") return cmd_selftest(config, out, err);
    throw ParameterError("unknown command '" + config.command + "'");
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }
}

}  // namespace qmcnet::cli
