#include "iw/util.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace iw {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers < 2 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= count) return;
        fn(k);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace iw
