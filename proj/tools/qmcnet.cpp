#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmcnet/cli.hpp"

namespace {

using qmcnet::cli::RunConfig;

// Values given on the command line; unset ones fall back to the config file
// or the built-in defaults.
struct Flags {
  std::optional<std::string> family, out, in, betas, config;
  std::optional<std::uint32_t> b;
  std::optional<std::size_t> m, s, alpha, samples, threads, t;
  std::optional<std::uint64_t> n, big_m, seed, cap, min, max;
  std::optional<double> q;
  std::vector<std::string> checks;
};

void add_common(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config, "JSON run configuration; flags override it");
  sub.add_option("--family", f.family, "construction family")
      ->check(CLI::IsMember(qmcnet::cli::families()));
  sub.add_option("--b", f.b, "prime base");
  sub.add_option("--m", f.m, "index digits (nets have b^m points)");
  sub.add_option("--s", f.s, "dimension");
  sub.add_option("--alpha", f.alpha, "interlacing factor / chen-skriganov alpha");
  sub.add_option("--N", f.n, "number of points (dp-finite, dp-sequence)");
  sub.add_option("--M", f.big_m, "davenport parameter (2M points)");
  sub.add_option("--betas", f.betas, "chen-skriganov betas, e.g. \"0,1;2,3\"");
  sub.add_option("--q", f.q, "L_q exponent");
  sub.add_option("--samples", f.samples, "Monte Carlo samples for L_q estimates");
  sub.add_option("--seed", f.seed, "random seed");
  sub.add_option("--threads", f.threads, "worker threads (0 = all cores)");
  sub.add_option("--cap", f.cap, "dual-space enumeration cap");
  sub.add_option("--out", f.out, "output file (default stdout)");
  sub.add_option("--in", f.in, "input point file");
}

RunConfig resolve(const std::string& command, const Flags& f) {
  RunConfig c = f.config ? qmcnet::cli::load_config(*f.config) : RunConfig{};
  c.command = command;
  if (f.family) c.family = *f.family;
  if (f.out) c.out = *f.out;
  if (f.in) c.in = *f.in;
  if (f.betas) c.betas = *f.betas;
  if (f.b) c.b = *f.b;
  if (f.m) c.m = *f.m;
  if (f.s) c.s = *f.s;
  if (f.alpha) c.alpha = f.alpha;
  if (f.samples) c.samples = *f.samples;
  if (f.threads) c.threads = *f.threads;
  if (f.t) c.t = f.t;
  if (f.n) c.n = f.n;
  if (f.big_m) c.big_m = f.big_m;
  if (f.seed) c.seed = *f.seed;
  if (f.cap) c.cap = *f.cap;
  if (f.min) c.min = f.min;
  if (f.max) c.max = f.max;
  if (f.q) c.q = *f.q;
  if (!f.checks.empty()) c.checks = f.checks;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital nets and sequences: construction, verification and discrepancy"};
  app.require_subcommand(1);

  Flags flags;
  auto* construct = app.add_subcommand("construct", "write a point file");
  auto* verify = app.add_subcommand("verify", "run structural checks and emit a pass/fail CSV");
  auto* discrepancy = app.add_subcommand("discrepancy", "L2 (and L_q) discrepancy report");
  auto* scaling = app.add_subcommand("scaling", "discrepancy over a parameter grid");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  for (auto* sub : {construct, verify, discrepancy, scaling, selftest}) add_common(*sub, flags);

  verify->add_option("--check", flags.checks, "checks to run")
      ->delimiter(',')
      ->check(CLI::IsMember(qmcnet::cli::verify_checks()));
  verify->add_option("--t", flags.t, "t-value for the geometric check / expected t");
  verify->add_option("--min", flags.min, "minimum dual Hamming weight required");
  scaling->add_option("--min", flags.min, "first grid value (m, N or M)");
  scaling->add_option("--max", flags.max, "last grid value (m, N or M)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qmcnet::cli::kParameterError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  RunConfig config;
  try {
    config = resolve(chosen->get_name(), flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qmcnet::cli::kParameterError;
  }
  return qmcnet::cli::run(config, std::cout, std::cerr);
}
