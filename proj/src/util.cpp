#include "khroma/util.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace khroma {

namespace {
int g_width = static_cast<int>(std::thread::hardware_concurrency());
}

void set_parallel_width(int width) { g_width = width < 1 ? 1 : width; }

int parallel_width() { return g_width < 1 ? 1 : g_width; }

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int width = std::min(parallel_width(), count);
  if (width <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mutex;
  int err_index = count;
  std::exception_ptr err;
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(width);
  for (int t = 0; t < width; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace khroma
