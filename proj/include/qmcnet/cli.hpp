#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmcnet/net.hpp"
#include "qmcnet/point_set.hpp"

namespace qmcnet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kParameterError = 1,
  kCapacityError = 2,
  kVerificationFailure = 3,
};

struct RunConfig {
  std::string command;
  std::string family;
  std::uint32_t b = 2;
  std::size_t m = 4;
  std::size_t s = 2;
  std::optional<std::size_t> alpha;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> big_m;
  double q = 2.0;
  std::size_t samples = 1u << 16;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::uint64_t cap = std::uint64_t{1} << 24;
  std::string out;
  std::string in;
  std::vector<std::string> checks;
  std::string betas;  // "0,1;2,3": one ';'-separated row per coordinate
  std::optional<std::size_t> t;
  std::optional<std::uint64_t> min;
  std::optional<std::uint64_t> max;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// JSON file representation. Unknown keys and wrong types raise
// ParameterError.
std::string to_json(const RunConfig& config);
RunConfig config_from_json(const std::string& text);
RunConfig load_config(const std::string& path);

const std::vector<std::string>& families();
const std::vector<std::string>& verify_checks();

std::vector<std::vector<std::uint32_t>> parse_betas(const std::string& text);

// Generating matrices for the digital-net families, nullopt otherwise.
std::optional<GeneratingMatrixSet> build_matrices(const RunConfig& config);
PointSet build_points(const RunConfig& config);

// Each command writes its primary output to `out` (or to config.out when
// set) and diagnostics to `err`, and returns an ExitCode.
int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_discrepancy(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scaling(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatches on config.command and maps exceptions to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qmcnet::cli
