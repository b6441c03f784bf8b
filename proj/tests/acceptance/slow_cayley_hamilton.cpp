// n = 3, k = 2 Cayley-Hamilton on a dense supermatrix.  Labelled "slow".

#include <cstdio>
#include <cstdlib>

#include "lienil_tools/reproduce.hpp"

int main() {
  const auto r = lienil::tools::slow_cayley_hamilton_n3(lienil::tools::kDefaultSeed);
  std::printf("%s %s (%zu checks)\n", r.name.c_str(), r.pass ? "PASS" : "FAIL", r.checks);
  for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
  return r.pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
