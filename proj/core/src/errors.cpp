#include "lienil/errors.hpp"

namespace lienil {

void throw_context_mismatch(const std::string& what) {
  throw ContextMismatch("context mismatch: " + what);
}

}  // namespace lienil
