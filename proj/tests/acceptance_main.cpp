// Acceptance run: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
// Optional arguments restrict the run to the given criterion ids.
#include "slelab/acceptance/criteria.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    ids.push_back(std::stoi(argv[i]));
  }
  const auto results = slelab::acceptance::run_suite(ids, std::cout);
  int failed = 0;
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
