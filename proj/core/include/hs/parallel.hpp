#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <vector>

namespace hs {

// Worker cap from HS_THREADS (default 1: fully sequential).
inline int worker_count() {
  if (const char* env = std::getenv("HS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// Sum f(i) for i in [0, count) with a fixed chunk decomposition and an
// index-ordered final reduction, so the result is bitwise identical for any
// worker count.
inline double deterministic_sum(size_t count,
                                const std::function<double(size_t)>& f) {
  constexpr size_t kChunk = 4096;
  size_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
  auto run_chunk = [&](size_t c) {
    double s = 0.0;
    size_t end = std::min(count, (c + 1) * kChunk);
    for (size_t i = c * kChunk; i < end; ++i) s += f(i);
    partial[c] = s;
  };
  int workers = worker_count();
  if (workers <= 1 || nchunks <= 1) {
    for (size_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (size_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1))
          run_chunk(c);
      }));
    for (auto& fu : futs) fu.get();
  }
  double total = 0.0;
  for (double s : partial) total += s;  // fixed order
  return total;
}

}  // namespace hs
