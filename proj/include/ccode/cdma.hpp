#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ccode/bitvec.hpp"
#include "ccode/params.hpp"

namespace ccode {

enum class HammingStatus { clean, corrected, detected_uncorrectable };

// Extended (8,4) Hamming code, minimum distance 4. Layout is
// (p1, p2, d0, p3, d1, d2, d3, P) with P the overall parity bit.
// Bit i of the returned byte is position i of that layout.
std::uint8_t hamming84_encode(std::uint8_t nibble);

struct HammingDecode {
    std::uint8_t nibble = 0;
    HammingStatus status = HammingStatus::clean;
};

// SECDED decoding: zero- and one-bit errors return the original nibble;
// two-bit errors are flagged and resolved to the nearest-by-syndrome word.
HammingDecode hamming84_decode(std::uint8_t received);

// Column-major block interleaver over `block_count` blocks of 8 bits:
// output position j*B + b holds input bit b*8 + j.
std::vector<std::uint8_t> interleave(std::span<const std::uint8_t> bits, std::size_t block_count);
std::vector<std::uint8_t> deinterleave(std::span<const std::uint8_t> bits, std::size_t block_count);

// Direct-sequence baseline: (8,4) Hamming, cross interleaving, then each of
// the 16m bits spread over a G-chip slot by XOR with a balanced seeded chip
// sequence. G = L / (m*N*f); for the default N=8, f=2, L=2048 that is 128/m,
// exact for power-of-two m. Other message counts round G down and leave the
// codeword tail unused.
struct CdmaParams {
    std::size_t m = 1;              // message count
    int n_data = 8;                 // bits per message
    int f_expansion = 2;            // error-correction expansion factor
    std::size_t codeword_len = 2048;
    std::uint64_t spreading_seed = 0;

    std::size_t chip_len() const;   // G
    std::size_t spread_len() const; // m * n_data * f_expansion * G
    void validate() const;
};

Codeword cdma_encode(std::span<const Message> messages, const CdmaParams& params);

/// Majority vote per chip slot (ties decode to 0), deinterleave, Hamming
/// decode; always returns exactly m messages.
std::vector<Message> cdma_decode(const Codeword& codeword, const CdmaParams& params);

} // namespace ccode
