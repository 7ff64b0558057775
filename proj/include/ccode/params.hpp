#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ccode/bitvec.hpp"

namespace ccode {

enum class CodeMode { closed, open };

// Desk-scale cap on codeword length; keeps hash tables and permutations in memory.
inline constexpr std::size_t kMaxCodewordLen = std::size_t{1} << 24;

// Code geometry. In closed mode the codeword length is pinned to 2^(N+k+1),
// so every (N+k)-bit extended message owns a collision-free address range.
struct CodeParams {
    int n_data = 8;                    // N, message bits
    int n_checksum = 0;                // k, fixed-value checksum bits
    std::size_t codeword_len = 0;      // L
    std::uint64_t checksum_value = 0;  // k bits, appended above bit N-1
    CodeMode mode = CodeMode::closed;

    static CodeParams closed_code(int n, int k);
    static CodeParams closed_code(int n, int k, std::uint64_t checksum);
    static CodeParams open_code(int n, int k, std::size_t codeword_len);
    static CodeParams open_code(int n, int k, std::size_t codeword_len, std::uint64_t checksum);

    void validate() const;

    int extended_bits() const { return n_data + n_checksum; }

    // Hash invocations per message on the encode side: one per data bit plus,
    // when checksum bits exist, one over the full extended string.
    int hash_calls_per_message() const { return n_data + (n_checksum > 0 ? 1 : 0); }
};

// A message stores its bits as an integer; bit 0 of `value` is the least
// significant message bit, which is where prefixes start growing.
struct Message {
    std::uint64_t value = 0;
    int n_bits = 0;

    auto operator<=>(const Message&) const = default;
};

// The first `length` stored bits of a message (LSB upward), optionally
// extended by the checksum at full length.
struct Prefix {
    std::uint64_t bits = 0;
    int length = 0;

    auto operator<=>(const Prefix&) const = default;
};

// Text form in message files is MSB first: "1001" has bit 0 = 1 and bit 3 = 1.
Message parse_message(std::string_view text);
std::string format_message(const Message& m);

// Prefixes of lengths 1..N in order, plus one (N+k)-bit entry carrying the
// checksum when k > 0.
std::vector<Prefix> message_prefixes(const Message& m, const CodeParams& params);

} // namespace ccode
