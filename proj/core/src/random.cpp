#include "lienil/random.hpp"

#include "lienil/errors.hpp"

namespace lienil {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw InvalidArgument("empty random range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection sampling keeps the draw unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

}  // namespace lienil
