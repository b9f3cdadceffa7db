#pragma once

// Deterministic fork-join helper for grid sweeps.  Each index writes only
// its own output slot, so results are bit-identical for any thread count.
// GREENKERN_THREADS caps the worker count (default: hardware concurrency).

#include <cstdlib>
#include <thread>
#include <vector>

namespace greenkern {

inline unsigned max_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("GREENKERN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(hw)) return static_cast<unsigned>(v);
        if (v >= static_cast<long>(hw)) return hw;
        return 1;
    }
    return hw;
}

template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
    const unsigned workers = std::min<size_t>(max_threads(), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace greenkern
