#include <doctest.h>

#include <stdexcept>
#include <string>

#include "lienil/errors.hpp"
#include "lienil/parallel.hpp"

using namespace lienil;

namespace {
struct ThreadGuard {
  ~ThreadGuard() { set_thread_count(0); }
};

// Deliberately non-associative, so any change in grouping shows up.
std::string reduce_with(std::size_t threads) {
  set_thread_count(threads);
  return deterministic_reduce(
      std::size_t{37}, std::size_t{5}, std::string(),
      [](std::size_t i) { return std::to_string(i); },
      [](const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; });
}
}  // namespace

TEST_CASE("reduction order does not depend on the thread count") {
  ThreadGuard guard;
  const auto one = reduce_with(1);
  CHECK(one == reduce_with(2));
  CHECK(one == reduce_with(4));
  CHECK(one == reduce_with(7));
}

TEST_CASE("empty reduction returns the initial value") {
  const int r = deterministic_reduce(std::size_t{0}, std::size_t{4}, 42, [](std::size_t) { return 1; },
                                     [](int a, int b) { return a + b; });
  CHECK(r == 42);
}

TEST_CASE("exceptions in workers propagate") {
  ThreadGuard guard;
  set_thread_count(3);
  CHECK_THROWS_AS(detail::run_chunks(10,
                                     [](std::size_t i) {
                                       if (i == 6) throw std::runtime_error("boom");
                                     }),
                  std::runtime_error);
}

TEST_CASE("thread count setting") {
  ThreadGuard guard;
  set_thread_count(2);
  CHECK(thread_count() == 2);
  set_thread_count(0);
  CHECK(thread_count() >= 1);
}
