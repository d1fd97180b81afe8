#include <algorithm>
#include <iostream>
#include <thread>

#include "qmcnet/acceptance.hpp"

int main() {
  qmcnet::AcceptanceOptions options;
  options.threads = std::max(1u, std::thread::hardware_concurrency());
  options.on_result = [](const qmcnet::CriterionResult& r) { qmcnet::print_criterion(std::cout, r); };
  const auto results = qmcnet::run_acceptance(options);
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
