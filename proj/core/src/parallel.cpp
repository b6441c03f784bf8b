#include "lienil/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace lienil {

namespace {
std::atomic<std::size_t> g_thread_override{0};

std::size_t default_threads() {
  if (const char* env = std::getenv("LIENIL_THREADS"); env != nullptr && *env != '\0') {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}
}  // namespace

std::size_t thread_count() {
  std::size_t n = g_thread_override.load();
  return n != 0 ? n : default_threads();
}

void set_thread_count(std::size_t n) { g_thread_override.store(n); }

namespace detail {

void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min(thread_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) task(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        task(c);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(chunks);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail
}  // namespace lienil
