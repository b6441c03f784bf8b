#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lienil {

struct SignedPermutation {
  std::vector<std::size_t> image;  // image[t] = p(t), 0-based
  int sign;
};

/// Parity of the inversion count: +1 or -1.
int permutation_sign(std::span<const std::size_t> p);

/// Every permutation of {0..n-1} in lexicographic order.  With
/// fixed = (s, r) only those with p(s) = r, produced by permuting the free
/// values over the free positions and splicing r in at position s.
std::vector<SignedPermutation> permutations(std::size_t n,
                                            std::optional<std::pair<std::size_t, std::size_t>> fixed = std::nullopt);

/// n!
std::size_t factorial(std::size_t n);

}  // namespace lienil
