#include "lienil/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "lienil/errors.hpp"

namespace lienil {

int permutation_sign(std::span<const std::size_t> p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<SignedPermutation> permutations(std::size_t n, std::optional<std::pair<std::size_t, std::size_t>> fixed) {
  std::vector<std::size_t> free_values;
  if (fixed) {
    if (fixed->first >= n || fixed->second >= n) throw InvalidArgument("fixed point outside permutation range");
    for (std::size_t v = 0; v < n; ++v)
      if (v != fixed->second) free_values.push_back(v);
  } else {
    free_values.resize(n);
    std::iota(free_values.begin(), free_values.end(), std::size_t{0});
  }
  std::vector<SignedPermutation> out;
  out.reserve(factorial(free_values.size()));
  do {
    std::vector<std::size_t> p;
    p.reserve(n);
    p.insert(p.end(), free_values.begin(), free_values.end());
    if (fixed) p.insert(p.begin() + static_cast<std::ptrdiff_t>(fixed->first), fixed->second);
    const int s = permutation_sign(p);
    out.push_back({std::move(p), s});
  } while (std::next_permutation(free_values.begin(), free_values.end()));
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace lienil
