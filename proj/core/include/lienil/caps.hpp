#pragma once

#include <cstddef>

namespace lienil {

/// Size limits for the permutation-sum determinants.  The matrix-size cap
/// defaults to 5 and can be raised through LIENIL_MAX_N, never beyond 6.
struct EnumerationCaps {
  static constexpr std::size_t kDefaultMaxN = 5;
  static constexpr std::size_t kHardMaxN = 6;
  /// Depth limit for characteristic polynomials (degree n^k).
  static constexpr unsigned kMaxCharpolyK = 2;
  /// Depth limit for rdet/ldet of a plain matrix.
  static constexpr unsigned kMaxDetK = 3;

  /// Effective cap; reads LIENIL_MAX_N on every call.
  static std::size_t max_n();
  /// Throws CapExceeded when n or k is too large.
  static void check(std::size_t n, unsigned k = 1, unsigned max_k = kMaxDetK);
};

/// Largest generator count for which exhaustive 2^g linear algebra on the
/// Grassmann algebra is attempted.
inline constexpr unsigned kDefaultSolverCap = 12;

}  // namespace lienil
