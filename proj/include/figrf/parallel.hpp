#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace figrf {

// Runs fn(0..count-1). Work items are independent and written by index, so
// results do not depend on the thread count or scheduling. n_threads == 0
// means hardware concurrency.
inline void parallel_for(int count, int n_threads, const std::function<void(int)>& fn) {
  if (n_threads == 0) n_threads = static_cast<int>(std::thread::hardware_concurrency());
  if (n_threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };

  std::vector<std::thread> pool;
  const int spawn = std::min(n_threads, count);
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace figrf
