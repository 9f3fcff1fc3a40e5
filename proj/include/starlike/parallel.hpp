#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace starlike {

// Worker count for sweep parallelism: hardware concurrency, capped by the
// STARLIKE_THREADS environment variable (positive integer) when set.
unsigned sweep_thread_count();

// Runs fn(i) for i in [0, n) on up to sweep_thread_count() threads. Static
// index striping; callers keep determinism by writing results into slot i.
template <typename Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
    unsigned workers = sweep_thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace starlike
