#pragma once

#include <cstdint>
#include <optional>

#include "ccode/bitvec.hpp"

namespace ccode {

// Seeded, deterministic corruption models.
struct ChannelSpec {
    double noise_fraction = 0.0;          // mu
    double gap_fraction = 0.0;
    std::optional<std::size_t> burst_start;  // empty = random placement
    std::uint64_t seed = 0;
};

/// OR-noise: exactly round(mu*L) distinct positions are set to 1. Marks are
/// indelible, so noise and signal coexist; no position is ever cleared.
Codeword add_noise(const Codeword& codeword, double mu, std::uint64_t seed);

// XOR-noise for the CDMA channel, where a spread chip has no indelible
// substance and noise alters the decoded value. Flips exactly round(mu*L)
// distinct positions.
Codeword flip_noise(const Codeword& codeword, double mu, std::uint64_t seed);

/// Zeroes the contiguous region [start, start + round(gf*L)); no wrap.
/// Random placement draws a start so the region fits.
Codeword burst_erase(const Codeword& codeword, double gap_fraction,
                     std::optional<std::size_t> start, std::uint64_t seed);

/// Noise first, then burst.
Codeword apply_channel(const Codeword& codeword, const ChannelSpec& spec);

} // namespace ccode
