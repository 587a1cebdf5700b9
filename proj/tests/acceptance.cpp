// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <iostream>  // for cout

#include "acceptance.hpp"

int main() {
  auto const  results = tolrep::acceptance::run_all(&std::cout);
  std::size_t failed  = 0;
  for (auto const& r : results) {
    failed += !r.passed;
  }
  std::cout << (results.size() - failed) << "/" << results.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
