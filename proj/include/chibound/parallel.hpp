#pragma once

// Deterministic parallel map: workers pull indices from a shared counter
// and write results into a preallocated slot per index, so the output
// order never depends on scheduling. CHI_THREADS overrides the hardware
// default; an explicit thread-count argument wins over both.

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace chibound {

inline int default_thread_count() {
    if (const char* env = std::getenv("CHI_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int threads, F fn) {
    std::vector<R> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    int t = std::min<std::size_t>(threads, count);
    pool.reserve(t);
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace chibound
