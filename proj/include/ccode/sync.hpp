#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ccode/bitvec.hpp"
#include "ccode/codec.hpp"
#include "ccode/hash.hpp"
#include "ccode/params.hpp"

namespace ccode {

// The six addresses of the length-1 and length-2 prefixes. Any populated
// codeword carries most of them, so the pattern doubles as a frame marker:
// H("0"), H("1") are the primary marks, the four length-2 addresses the
// secondary marks.
struct PrincipleMarkPattern {
    std::array<std::uint32_t, 6> addresses{};
};

struct SyncCandidate {
    std::size_t offset = 0;
    int score = 0;  // pattern addresses holding a mark, 0..6

    bool operator==(const SyncCandidate&) const = default;
};

PrincipleMarkPattern principle_marks(const HashFunction& hash);

/// Score with the codeword start placed at `offset`; stream positions past
/// the end read as zeros.
int pattern_score(const BitVec& stream, const PrincipleMarkPattern& pattern, std::size_t offset);

/// One candidate per offset in [first_offset, last_offset].
std::vector<SyncCandidate> correlate(const BitVec& stream, const PrincipleMarkPattern& pattern,
                                     std::size_t first_offset, std::size_t last_offset);

struct SyncOptions {
    int q_threshold = 5;
    // Burst interaction: lower the threshold at an offset by the number of
    // pattern addresses falling inside gaps detected in that window.
    bool reduce_threshold_in_gaps = false;
    double gap_false_positive_target = 0.01;
};

/// Candidates scoring >= the (possibly gap-reduced) threshold, best score
/// first, ties by ascending offset. The decoder tries them in order.
std::vector<SyncCandidate> synchronize(const BitVec& stream, const HashFunction& hash,
                                       const CodeParams& params, const SyncOptions& options = {});

// P(a)_m for a = 2..6: the chance that a principle marks are populated after
// m random messages. Element [i] is P(i + 2).
std::array<double, 5> principle_mark_distribution(int m);

/// Expected correlation at the true offset for m encoded messages.
double expected_principle_marks(int m);

/// Expected count of q-fold correlations arising by chance from noise
/// fraction mu in a codeword space of L addresses: L * mu^q.
double false_correlation_rate(int q, double mu, std::size_t L);

/// Noise fraction at which the chance q-fold correlation count equals
/// f_target: (f_target / L)^(1/q).
double acceptable_noise(int q, double f_target, std::size_t L);

} // namespace ccode
