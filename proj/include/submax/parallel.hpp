#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace submax::par {

inline std::atomic<int>& worker_count_slot() {
    static std::atomic<int> count{0};  // 0 = use hardware concurrency
    return count;
}

inline int worker_count() {
    int c = worker_count_slot().load(std::memory_order_relaxed);
    if (c > 0) return c;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void set_worker_count(int c) {
    worker_count_slot().store(c < 1 ? 0 : c, std::memory_order_relaxed);
}

/// Runs body(begin, end) over a static partition of [0, n).
/// Results must not depend on the partition; callers write to
/// pre-sized disjoint slots so any worker count gives identical output.
template <class Body>
void for_chunks(std::size_t n, Body&& body) {
    if (n == 0) return;
    int workers = worker_count();
    // Small ranges are not worth the spawn cost.
    if (workers <= 1 || n < 4096) {
        body(std::size_t{0}, n);
        return;
    }
    std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::size_t chunk = (n + parts - 1) / parts;
    std::vector<std::thread> threads;
    threads.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) {
        std::size_t begin = p * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace submax::par
