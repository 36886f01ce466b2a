#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hochster {

/// Resolves 0 to the hardware concurrency (at least 1).
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, total) into fixed chunks handed out to `threads` workers.
/// `body(begin, end, worker)` runs once per chunk; chunk boundaries do not
/// depend on the thread count. The exception from the lowest failing chunk is
/// rethrown after all workers finish.
template <class Body>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk, unsigned threads,
                     Body&& body) {
  threads = resolve_threads(threads);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(chunks);
  auto worker = [&](unsigned id) {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        body(c * chunk, std::min(total, (c + 1) * chunk), id);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  if (threads == 1 || chunks <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    const unsigned spawned =
        static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    for (unsigned id = 0; id < spawned; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hochster
