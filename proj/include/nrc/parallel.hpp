#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace nrc {

// Thread count used by the angle sweeps and trial batches.  Capped by the
// NRC_THREADS environment variable; always at least 1.
inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("NRC_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<long>(n, cap);
    }
    return n;
}

// Runs fn(i) for i in [0, count).  Work is split into contiguous chunks, one
// per thread.  fn must write only to its own slot(s), so the result is
// independent of the thread count and of scheduling.
template <typename Fn>
void parallel_for(int count, Fn&& fn, int max_threads = 0) {
    int threads = max_threads > 0 ? std::min(max_threads, thread_budget()) : thread_budget();
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    int chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = t * chunk;
        int hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace nrc
