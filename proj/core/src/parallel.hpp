#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace d2k::detail {

/// Runs fn(block) for block in [0, blocks) on up to `threads` workers.
/// Callers that need deterministic output write per-block results and reduce
/// them in block order afterwards.
template <typename Fn>
void for_each_block(std::size_t blocks, unsigned threads, Fn&& fn) {
  if (threads <= 1 || blocks <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      try {
        fn(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
  for (unsigned i = 0; i + 1 < count; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace d2k::detail
