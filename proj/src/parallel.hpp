#pragma once

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace msfa {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Run fn(i) for i in [begin, end) across up to `threads` workers. Each
// index owns its own output slot wherever fn writes, so results are
// independent of scheduling order. The first exception thrown by fn is
// rethrown after all workers drain.
template <typename Fn>
void parallel_for(int begin, int end, int threads, Fn&& fn) {
    const int n = end - begin;
    if (n <= 0) return;
    const int nt = std::min(resolve_threads(threads), n);
    if (nt <= 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<int> next{begin};
    std::vector<std::future<void>> workers;
    workers.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        workers.push_back(std::async(std::launch::async, [&fn, &next, end] {
            for (int i = next.fetch_add(1); i < end; i = next.fetch_add(1)) fn(i);
        }));
    }
    for (auto& w : workers) w.get();
}

}  // namespace msfa
