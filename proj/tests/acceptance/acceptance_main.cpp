// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "driftmax/cli/checks.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (argc > 1) {
    const char* end = argv[1] + std::strlen(argv[1]);
    if (std::from_chars(argv[1], end, seed).ptr != end) {
      std::cerr << "usage: driftmax_acceptance [seed]\n";
      return 2;
    }
  }
  int failed = 0;
  const auto& catalog = driftmax::cli::check_catalog();
  for (const auto& info : catalog) {
    const auto result = driftmax::cli::run_check(info.id, seed, 0);
    std::cout << driftmax::cli::format_check(result, true) << std::flush;
    if (!result.pass) ++failed;
  }
  std::cout << "acceptance: " << catalog.size() - static_cast<std::size_t>(failed) << " of " << catalog.size()
            << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
