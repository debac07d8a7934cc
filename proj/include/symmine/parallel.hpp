// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace symmine {

// Run fn(worker, begin, end) over contiguous chunks of [0, n), possibly on
// several threads. The chunking is a pure function of (n, n_threads), and
// callers must keep per-index work independent plus reduce per-worker
// results in worker order, so output never depends on scheduling.
template <typename Fn>
void parallel_blocks(std::size_t n, int n_threads, Fn&& fn) {
    if (n == 0) return;
    const std::size_t workers = std::max<std::size_t>(
        1, std::min<std::size_t>(static_cast<std::size_t>(std::max(1, n_threads)), n));
    const std::size_t chunk = (n + workers - 1) / workers;
    if (workers == 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace symmine
