#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "qmcnet/cli.hpp"
#include "qmcnet/constructions.hpp"
#include "qmcnet/errors.hpp"
#include "qmcnet/point_io.hpp"

using namespace qmcnet;
using namespace qmcnet::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_config(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(std::string command, std::string family) {
  RunConfig c;
  c.command = std::move(command);
  c.family = std::move(family);
  return c;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qmcnet_test_" + name);
}

}  // namespace

TEST_CASE("config JSON round trip") {
  RunConfig c = config("verify", "chen-skriganov");
  c.b = 5;
  c.m = 2;
  c.alpha = 2;
  c.betas = "0,1;2,3";
  c.checks = {"tvalue", "hamming"};
  c.q = 3.5;
  c.t = 1;
  c.max = 9;
  CHECK(config_from_json(to_json(c)) == c);
  CHECK(config_from_json(to_json(RunConfig{})) == RunConfig{});
  CHECK(config_from_json("{\"b\": 7}").b == 7);
  CHECK_THROWS_AS(config_from_json("{\"bogus\": 1}"), ParameterError);
  CHECK_THROWS_AS(config_from_json("{\"b\": \"two\"}"), ParameterError);
  CHECK_THROWS_AS(config_from_json("[1, 2]"), ParameterError);
  CHECK_THROWS_AS(config_from_json("{"), ParameterError);
  CHECK_THROWS_AS(load_config("/nonexistent/qmcnet.json"), ParameterError);
}

TEST_CASE("betas parsing") {
  CHECK(parse_betas("0,1;2,3") == std::vector<std::vector<std::uint32_t>>{{0, 1}, {2, 3}});
  CHECK(parse_betas("").empty());
  CHECK_THROWS_AS(parse_betas("0,x"), ParameterError);
}

TEST_CASE("construct writes a loadable point file") {
  RunConfig c = config("construct", "faure");
  c.b = 3;
  c.m = 2;
  c.s = 3;
  const auto r = run_config(c);
  CHECK(r.code == kSuccess);
  std::istringstream in(r.out);
  const auto p = read_point_file(in);
  CHECK(p == generate_net_points(faure_matrices(3, 2, 3), p.provenance()));
  CHECK(p.provenance().family == "faure");
  CHECK(run_config(c).out == r.out);

  const auto path = temp_file("dp_finite.txt");
  RunConfig f = config("construct", "dp-finite");
  f.n = 13;
  f.s = 2;
  f.out = path.string();
  CHECK(run_config(f).code == kSuccess);
  CHECK(read_point_file(path) == dp_finite_pointset(13, 2));
  std::filesystem::remove(path);
}

TEST_CASE("construct parameter and capacity errors") {
  RunConfig bad = config("construct", "faure");
  bad.b = 4;
  CHECK(run_config(bad).code == kParameterError);
  RunConfig too_big = config("construct", "faure");
  too_big.b = 2;
  too_big.s = 2;
  too_big.m = 40;
  CHECK(run_config(too_big).code == kCapacityError);
  CHECK(run_config(config("construct", "no-such-family")).code == kParameterError);
  CHECK(run_config(config("no-such-command", "faure")).code == kParameterError);
}

TEST_CASE("verify reports pass, failure and capacity") {
  RunConfig cs = config("verify", "chen-skriganov");
  cs.b = 5;
  cs.m = 2;
  cs.alpha = 2;
  const auto r = run_config(cs);
  CHECK(r.code == kSuccess);
  CHECK(r.out.rfind("check,status,value,threshold,detail\n", 0) == 0);
  CHECK(r.out.find("hamming,pass") != std::string::npos);
  CHECK(r.out.find("fail") == std::string::npos);

  RunConfig strict = config("verify", "faure");
  strict.b = 3;
  strict.m = 3;
  strict.s = 3;
  strict.checks = {"tvalue"};
  strict.t = 0;
  CHECK(run_config(strict).code == kSuccess);

  RunConfig nied = config("verify", "niederreiter");
  nied.m = 6;
  nied.s = 4;
  nied.checks = {"tvalue"};
  nied.t = 0;
  const auto failed = run_config(nied);
  CHECK(failed.code == kVerificationFailure);
  CHECK(failed.out.find("tvalue,fail") != std::string::npos);

  RunConfig capped = config("verify", "chen-skriganov");
  capped.b = 5;
  capped.m = 2;
  capped.alpha = 2;
  capped.checks = {"hamming"};
  capped.cap = 10;
  CHECK(run_config(capped).code == kCapacityError);

  RunConfig order = config("verify", "dp-net");
  order.m = 4;
  order.s = 1;
  order.checks = {"order-alpha"};
  CHECK(run_config(order).code == kSuccess);
}

TEST_CASE("verify a point file") {
  const auto path = temp_file("vdc.txt");
  write_point_file(path, generate_net_points(van_der_corput_matrices(2, 4)));
  RunConfig c = config("verify", "");
  c.in = path.string();
  CHECK(run_config(c).code == kSuccess);
  std::filesystem::remove(path);
  CHECK(run_config(c).code == kParameterError);
}

TEST_CASE("discrepancy reports") {
  RunConfig c = config("discrepancy", "van-der-corput");
  c.m = 2;
  const auto r = run_config(c);
  CHECK(r.code == kSuccess);
  std::istringstream lines(r.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "family,params,N,s,q,method,value,stderr,roth_ratio,S_N");
  CHECK(row.find("exact-pairwise") != std::string::npos);
  CHECK_FALSE(std::getline(lines, extra));

  c.q = 3.0;
  c.samples = 4096;
  const auto two = run_config(c);
  CHECK(two.code == kSuccess);
  CHECK(two.out.find("estimated") != std::string::npos);
  CHECK(run_config(c).out == two.out);
}

TEST_CASE("scaling rows") {
  RunConfig c = config("scaling", "dp-net");
  c.s = 2;
  c.min = 3;
  c.max = 6;
  const auto r = run_config(c);
  CHECK(r.code == kSuccess);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 5);
}
