#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccode/bitvec.hpp"
#include "ccode/hash.hpp"
#include "ccode/params.hpp"

namespace ccode {

// Maximal run of zeros treated as a burst erasure.
struct GapRegion {
    std::size_t start = 0;
    std::size_t length = 0;

    std::size_t end() const { return start + length; }
    bool contains(std::size_t address) const { return address >= start && address < end(); }
    bool operator==(const GapRegion&) const = default;
};

struct DecodeOptions {
    bool bridge_gaps = false;
    // Expected count of chance gaps per codeword the detector tolerates.
    double gap_false_positive_target = 0.01;
    // When set, overrides detection entirely.
    std::optional<std::vector<GapRegion>> explicit_gaps;
};

struct DecodeResult {
    std::vector<Message> messages;              // ascending numeric order
    std::uint64_t hash_calls = 0;               // every hash invocation
    std::vector<GapRegion> gaps_used;
    std::vector<std::size_t> live_branch_counts;  // after each round
};

/// Union of marks at hash(prefix) over every prefix of every message.
/// Duplicate messages merge silently.
Codeword encode(std::span<const Message> messages, const HashFunction& hash,
                const CodeParams& params);

// Prefix-tree decoding. Round j extends each live branch b to b0 and b1 and
// keeps a child alive iff the codeword holds a mark at hash(child), or
// bridging is on and the address falls inside a gap in gaps_used. After round
// N, when k > 0, a branch survives only if the same test passes at
// hash(branch with checksum appended).
DecodeResult decode(const Codeword& codeword, const HashFunction& hash,
                    const CodeParams& params, const DecodeOptions& options = {});

/// Every maximal zero run of length >= min_gap_len, ascending. Leading and
/// trailing runs qualify; no wrap-around.
std::vector<GapRegion> find_gaps(const Codeword& codeword, std::size_t min_gap_len);

/// Smallest g with L*(1-density)^g <= false_positive_target: zero runs of
/// that length are statistically unlikely to appear by chance.
std::size_t gap_threshold(double mark_density, double false_positive_target, std::size_t L);

} // namespace ccode
