#include "lienil/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "lienil/errors.hpp"

namespace lienil {

std::size_t EnumerationCaps::max_n() {
  const char* env = std::getenv("LIENIL_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) throw InvalidArgument(std::string("bad LIENIL_MAX_N value: ") + env);
  return std::min<std::size_t>(static_cast<std::size_t>(v), kHardMaxN);
}

void EnumerationCaps::check(std::size_t n, unsigned k, unsigned max_k) {
  const std::size_t cap = max_n();
  if (n > cap)
    throw CapExceeded("matrix size " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  if (k > max_k) throw CapExceeded("k = " + std::to_string(k) + " exceeds cap " + std::to_string(max_k));
  if (k == 0) throw InvalidArgument("k must be positive");
}

}  // namespace lienil
