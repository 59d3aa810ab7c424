#include "rigid/surface.hpp"
#include "rigid/util.hpp"

#include <cstdlib>

namespace rigid {

unsigned thread_cap() {
  static unsigned cap = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RIGIDSET_THREADS")) {
      long v = std::atol(env);
      if (v > 0 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
  }();
  return cap;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = thread_cap();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rigid
