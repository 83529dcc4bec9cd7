#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace bforge {

// Worker cap for internally parallel scans. BALANCE_FORGE_THREADS overrides
// the hardware default; every parallel site must reduce in a fixed order so
// results do not depend on the schedule.
inline int worker_count() {
    if (const char* env = std::getenv("BALANCE_FORGE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block split of [0, count); fn(worker, begin, end) runs per worker.
// Workers get contiguous ranges so a caller can merge per-worker results in
// worker order and stay deterministic.
inline void parallel_ranges(std::size_t count,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
    int workers = std::min<std::size_t>(worker_count(), count == 0 ? 1 : count);
    if (workers <= 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t begin = std::min(count, w * chunk);
        std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back(fn, w, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace bforge
