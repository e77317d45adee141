#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace harmonia {

// Worker cap: HARMONIA_THREADS if set and positive, else hardware concurrency.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("HARMONIA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(begin, end) over disjoint chunks of [0, n). Falls back to a single
// inline call for small n or a cap of 1.
template <typename F>
void parallel_chunks(std::size_t n, F&& f) {
    const unsigned cap = thread_cap();
    if (n < 4096 || cap <= 1) {
        f(std::size_t{0}, n);
        return;
    }
    const unsigned workers = std::min<unsigned>(cap, 8);
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&f, lo, hi] { f(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace harmonia
