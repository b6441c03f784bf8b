#include "lienil/dets.hpp"

namespace lienil {

Integer charpoly_leading_coefficient(std::size_t n, unsigned k) {
  if (n == 0 || k == 0) throw InvalidArgument("charpoly leading coefficient needs n, k >= 1");
  Integer fact = 1;
  for (std::size_t i = 2; i < n; ++i) fact *= static_cast<unsigned long>(i);
  // exponent 1 + n + ... + n^(k-1)
  unsigned long exponent = 0, pw = 1;
  for (unsigned i = 0; i < k; ++i, pw *= n) exponent += pw;
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), fact.get_mpz_t(), exponent);
  return result * static_cast<unsigned long>(n);
}

}  // namespace lienil
