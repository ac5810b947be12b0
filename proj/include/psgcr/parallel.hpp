// Deterministic work splitting. Results never depend on the worker count:
// first-find scans merge per-chunk results by index, so the least-index hit
// wins regardless of scheduling.
#pragma once

#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace psgcr {

inline int default_workers() {
  if (const char* env = std::getenv("PSGCR_PARALLEL")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= 64) return v;
  }
  return 1;
}

// probe(i) -> std::optional<T>; returns the least-index hit, scanning [0, n)
template <class T, class Probe>
std::optional<std::pair<size_t, T>> parallel_first(size_t n, int workers,
                                                   Probe&& probe) {
  if (workers < 1) workers = 1;
  if (workers == 1 || n < 2 * static_cast<size_t>(workers)) {
    for (size_t i = 0; i < n; ++i)
      if (auto r = probe(i)) return std::make_pair(i, std::move(*r));
    return std::nullopt;
  }
  size_t w = static_cast<size_t>(workers);
  std::atomic<size_t> best{n};
  std::vector<std::optional<std::pair<size_t, T>>> hits(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  size_t chunk = (n + w - 1) / w;
  for (size_t c = 0; c < w; ++c) {
    threads.emplace_back([&, c] {
      size_t lo = c * chunk, hi = std::min(n, lo + chunk);
      for (size_t i = lo; i < hi; ++i) {
        if (i > best.load(std::memory_order_relaxed)) return;
        if (auto r = probe(i)) {
          hits[c] = std::make_pair(i, std::move(*r));
          size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  std::optional<std::pair<size_t, T>> out;
  for (auto& h : hits)
    if (h && (!out || h->first < out->first)) out = std::move(h);
  return out;
}

} // namespace psgcr
