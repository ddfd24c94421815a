#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace goodlab {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Smallest index i in [0, count) with pred(i) true, evaluated on up to
/// `threads` workers. Indices are claimed in increasing order and an index is
/// skipped only when a smaller satisfying index is already known, so every
/// index below the returned one has been evaluated. The answer does not
/// depend on the worker count.
template <typename Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, unsigned threads, Pred&& pred) {
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{kNone};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || i > best.load(std::memory_order_acquire)) return;
            if (pred(i)) {
                std::size_t current = best.load();
                while (i < current && !best.compare_exchange_weak(current, i)) {
                }
            }
        }
    };

    const unsigned workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    std::size_t found = best.load();
    if (found == kNone) return std::nullopt;
    return found;
}

}  // namespace goodlab
