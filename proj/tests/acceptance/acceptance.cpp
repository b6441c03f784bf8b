// One PASS/FAIL line per acceptance criterion.  Exits nonzero on any FAIL.
//
//   acceptance [seed]

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "lienil/dets.hpp"
#include "lienil_tools/reproduce.hpp"

using namespace lienil;
using namespace lienil::tools;

namespace {

// sdet with one term dropped; criterion 3 must reject it.
OraclePolynomial broken_sdet(const CommutativePolyRing& ring, const MatrixOf<CommutativePolyRing>& a) {
  return ring.sub(sdet(ring, a), ring.mul(a(0, 0), a(a.rows() - 1, a.cols() - 1)));
}

}  // namespace

int main(int argc, char** argv) {
  ReproduceOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);

  opts.threads = 1;
  const auto serial = reproduce_all(opts);
  opts.threads = 3;
  const auto threaded = reproduce_all(opts);
  const bool same_report = report_to_json(opts.seed, serial).dump() == report_to_json(opts.seed, threaded).dump();

  const auto mutant = criterion_oracle(opts.seed * 1000003 + 3, broken_sdet);

  bool all = true;
  for (const auto& r : serial) {
    bool pass = r.pass;
    std::string note;
    if (r.id == 3 && mutant.pass) {
      pass = false;
      note = " (a broken sdet was not detected)";
    }
    if (r.id == 11 && !same_report) {
      pass = false;
      note = " (reports differ between 1 and 3 threads)";
    }
    all = all && pass;
    std::printf("criterion %2d %-28s %s%s\n", r.id, r.name.c_str(), pass ? "PASS" : "FAIL", note.c_str());
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
  }
  if (serial.size() != 11) {
    std::printf("expected 11 criteria, got %zu\n", serial.size());
    all = false;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
