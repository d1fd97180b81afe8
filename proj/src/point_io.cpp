#include "qmcnet/point_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qmcnet/errors.hpp"

namespace qmcnet {

namespace {

constexpr std::string_view kProvenanceTag = "# provenance ";

std::string digit_token(const DigitVector& d) {
  std::string out;
  if (d.base() <= 10) {
    for (auto v : d.digits()) out += static_cast<char>('0' + v);
  } else {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(d.digits()[i]);
    }
  }
  return out;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

void write_point_file(std::ostream& os, const PointSet& points) {
  const auto& prov = points.provenance();
  if (!prov.family.empty()) {
    os << kProvenanceTag << "family=" << prov.family << " params=" << prov.params << '\n';
  }
  os << points.base() << ' ' << points.m() << ' ' << points.dim() << ' ' << points.precision()
     << ' ' << points.size() << '\n';
  for (std::size_t n = 0; n < points.size(); ++n) {
    for (std::size_t j = 0; j < points.dim(); ++j) {
      if (j != 0) os << ' ';
      if (points.axis_is_digital(j)) {
        if (points.precision() == 0) throw DomainError("cannot write zero-precision digit strings");
        os << digit_token(points.digits(n, j));
      } else {
        os << points.numerator(n, j) << '/' << points.denominator(j);
      }
    }
    os << '\n';
  }
}

void write_point_file(const std::filesystem::path& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_point_file(out, points);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

PointSet read_point_file(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  Provenance prov;

  std::vector<std::string> header;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.starts_with(kProvenanceTag)) {
      const std::string rest = line.substr(kProvenanceTag.size());
      const auto fam = rest.find("family=");
      const auto par = rest.find(" params=");
      if (fam != 0 || par == std::string::npos) throw ParseError(line_no, "malformed provenance");
      prov.family = rest.substr(7, par - 7);
      prov.params = rest.substr(par + 8);
      continue;
    }
    if (line.starts_with('#')) continue;
    header = split_ws(line);
    if (header.empty()) continue;
    break;
  }
  if (header.empty()) throw ParseError(line_no, "missing header line");
  if (header.size() != 5) throw ParseError(line_no, "header must be 'base m s precision count'");
  std::uint64_t fields[5];
  for (int i = 0; i < 5; ++i) {
    const auto v = parse_u64(header[i]);
    if (!v) throw ParseError(line_no, "header field '" + header[i] + "' is not an integer");
    fields[i] = *v;
  }
  const auto base = static_cast<std::uint32_t>(fields[0]);
  const std::size_t m = fields[1], dim = fields[2], precision = fields[3], count = fields[4];
  if (base < 2 || fields[0] > UINT32_MAX) throw ParseError(line_no, "invalid base");
  if (dim == 0) throw ParseError(line_no, "dimension must be positive");

  std::optional<PointSet> points;
  try {
    points.emplace(base, dim, precision, m);
  } catch (const std::exception& e) {
    throw ParseError(line_no, e.what());
  }
  const std::uint64_t digital_den = points->denominator(0);

  // Denominators of non-digital axes are fixed by the first point line.
  std::vector<std::uint64_t> denominators(dim, digital_den);
  std::vector<std::uint64_t> nums(dim);
  std::vector<std::uint64_t> all_nums;
  all_nums.reserve(count * dim);

  std::size_t read = 0;
  while (read < count && std::getline(is, line)) {
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != dim) {
      throw ParseError(line_no, "expected " + std::to_string(dim) + " coordinates, found " +
                                    std::to_string(toks.size()));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const std::string& tok = toks[j];
      std::uint64_t den = digital_den;
      std::uint64_t num = 0;
      if (const auto slash = tok.find('/'); slash != std::string::npos) {
        const auto n = parse_u64(std::string_view(tok).substr(0, slash));
        const auto d = parse_u64(std::string_view(tok).substr(slash + 1));
        if (!n || !d || *d == 0) throw ParseError(line_no, "bad rational '" + tok + "'");
        num = *n;
        den = *d;
      } else {
        std::vector<std::uint32_t> digits;
        if (base <= 10) {
          for (char ch : tok) {
            if (ch < '0' || ch > '9') throw ParseError(line_no, "bad digit in '" + tok + "'");
            digits.push_back(static_cast<std::uint32_t>(ch - '0'));
          }
        } else {
          std::istringstream parts(tok);
          for (std::string part; std::getline(parts, part, ',');) {
            const auto v = parse_u64(part);
            if (!v) throw ParseError(line_no, "bad digit in '" + tok + "'");
            digits.push_back(static_cast<std::uint32_t>(*v));
          }
        }
        if (digits.size() != precision) {
          throw ParseError(line_no, "digit string '" + tok + "' does not have " +
                                        std::to_string(precision) + " digits");
        }
        for (auto d : digits) {
          if (d >= base) throw ParseError(line_no, "digit out of range in '" + tok + "'");
          num = num * base + d;
        }
      }
      if (read == 0) {
        denominators[j] = den;
      } else if (den != denominators[j]) {
        throw ParseError(line_no, "axis " + std::to_string(j + 1) + " changes denominator");
      }
      if (num >= den) throw ParseError(line_no, "coordinate '" + tok + "' outside [0,1)");
      nums[j] = num;
    }
    all_nums.insert(all_nums.end(), nums.begin(), nums.end());
    ++read;
  }
  if (read != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) + " points, found " +
                                  std::to_string(read));
  }
  while (std::getline(is, line)) {
    ++line_no;
    if (!split_ws(line).empty()) throw ParseError(line_no, "unexpected content after last point");
  }

  PointSet out(base, dim, precision, m, denominators);
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    out.add_point(std::span<const std::uint64_t>(all_nums.data() + n * dim, dim));
  }
  out.set_provenance(std::move(prov));
  return out;
}

PointSet read_point_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point file " + path.string());
  return read_point_file(in);
}

}  // namespace qmcnet
