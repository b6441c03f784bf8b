#pragma once

#include <cstdint>
#include <random>

namespace lienil {

/// Seeded generator with platform-independent bounded draws.  The standard
/// distributions are implementation-defined, which would break byte-identical
/// reports across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin(unsigned num, unsigned den) { return uniform(0, den - 1) < num; }
  /// Independent child stream; used to give every sample its own seed.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lienil
