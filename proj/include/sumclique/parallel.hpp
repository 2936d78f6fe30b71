#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace sumclique {

// Worker count: min(SUMCLIQUE_THREADS, hardware_concurrency), at least 1.
// An explicit `override_threads` > 0 wins over the environment.
inline unsigned worker_count(unsigned override_threads = 0) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned cap = hw;
    if (override_threads > 0) {
        cap = override_threads;
    } else if (const char* env = std::getenv("SUMCLIQUE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) cap = static_cast<unsigned>(v);
    }
    return cap < 1 ? 1 : cap;
}

// Runs fn(i) for i in [0, n). Each index is processed exactly once; callers
// write results into preallocated slot i, so the merged output does not depend
// on the worker count or interleaving.
template <class Fn>
void parallel_for_index(std::size_t n, Fn&& fn, unsigned override_threads = 0) {
    unsigned nw = worker_count(override_threads);
    if (nw <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(nw < n ? nw : n);
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
}

}  // namespace sumclique
