#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ccode/params.hpp"

namespace ccode {

// All randomness in the library flows through mt19937_64 so that a seed
// reproduces bit-identical results on any platform. std::shuffle and the
// distribution classes are implementation-defined, so the draws below are
// spelled out by hand.
using Rng = std::mt19937_64;

inline std::uint64_t bounded(Rng& rng, std::uint64_t n) {
    // Plain modulo; the bias is irrelevant at desk scale and determinism matters.
    return rng() % n;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// `count` distinct indices from [0, n), by partial Fisher-Yates.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count, Rng& rng);

// `count` distinct random messages of n_bits each.
std::vector<Message> sample_messages(std::size_t count, int n_bits, Rng& rng);

} // namespace ccode
