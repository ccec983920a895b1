#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cams {

/// Resolves a worker-count flag: 0 means machine parallelism.
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(begin, end, worker) over contiguous chunks of [0, n).
/// Callers must make results independent of the chunking (write to
/// disjoint slots, or merge commutatively).
template <typename Fn>
void parallel_chunks(std::size_t n, int workers, Fn&& fn) {
    const int w = std::max(1, std::min<int>(resolve_workers(workers),
                                            static_cast<int>(std::min<std::size_t>(n, 1 << 16))));
    if (w <= 1 || n == 0) {
        fn(std::size_t{0}, n, 0);
        return;
    }
    const std::size_t chunk = (n + w - 1) / w;
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (int i = 0; i < w; ++i) {
        const std::size_t begin = chunk * i;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end, i] { fn(begin, end, i); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace cams
