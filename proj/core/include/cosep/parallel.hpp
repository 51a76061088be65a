#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cosep {

// Worker count for embarrassingly parallel loops: the COSEP_THREADS
// environment variable when set, else the hardware concurrency.
inline int default_thread_count() {
    if (const char* env = std::getenv("COSEP_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs f(i) for i in [begin, end). Results must be written to per-index slots;
// with work units seeded independently this keeps outputs identical for every
// worker count.
template <class F>
void parallel_for(int begin, int end, F f, int threads = default_thread_count()) {
    int count = end - begin;
    if (count <= 0) return;
    if (threads <= 1 || count == 1) {
        for (int i = begin; i < end; ++i) f(i);
        return;
    }
    threads = std::min(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w]() {
            for (int i = begin + w; i < end; i += threads) f(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace cosep
