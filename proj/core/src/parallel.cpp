#include "spintomo/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spintomo {

int thread_count() {
  static const int count = [] {
    const char* env = std::getenv("TOMO_THREADS");
    int n = 1;
    if (env != nullptr) {
      n = std::atoi(env);
      if (n < 1) n = 1;
    }
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw > 0) n = std::min(n, hw);
    return n;
  }();
  return count;
}

void parallel_chunks(std::size_t n, const std::function<void(int, std::size_t, std::size_t)>& f) {
  const int workers = std::max(1, std::min<int>(thread_count(), static_cast<int>(n)));
  if (workers == 1) {
    f(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(f, w, begin, end);
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace spintomo
