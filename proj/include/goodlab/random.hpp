#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace goodlab {

/// All randomized operations draw from this engine; its output sequence is
/// fixed by the standard, so results depend only on the seed.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound must be positive.
/// Unlike std::uniform_int_distribution this is identical across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

/// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_below(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace goodlab
