#include "ccode/sync.hpp"

#include <algorithm>
#include <cmath>

namespace ccode {

PrincipleMarkPattern principle_marks(const HashFunction& hash) {
    PrincipleMarkPattern p;
    p.addresses[0] = hash.address_of(Prefix{0, 1});  // H("0")
    p.addresses[1] = hash.address_of(Prefix{1, 1});  // H("1")
    for (std::uint64_t v = 0; v < 4; ++v)            // H("00"), H("01"), H("10"), H("11")
        p.addresses[2 + v] = hash.address_of(Prefix{v, 2});
    return p;
}

int pattern_score(const BitVec& stream, const PrincipleMarkPattern& pattern, std::size_t offset) {
    int score = 0;
    for (auto a : pattern.addresses)
        if (stream.test_or_zero(offset + a)) ++score;
    return score;
}

std::vector<SyncCandidate> correlate(const BitVec& stream, const PrincipleMarkPattern& pattern,
                                     std::size_t first_offset, std::size_t last_offset) {
    if (last_offset < first_offset) throw Error("correlate: empty offset range");
    std::vector<SyncCandidate> out;
    out.reserve(last_offset - first_offset + 1);
    for (std::size_t t = first_offset; t <= last_offset; ++t)
        out.push_back(SyncCandidate{t, pattern_score(stream, pattern, t)});
    return out;
}

std::vector<SyncCandidate> synchronize(const BitVec& stream, const HashFunction& hash,
                                       const CodeParams& params, const SyncOptions& options) {
    if (options.q_threshold < 1 || options.q_threshold > 6)
        throw Error("q_threshold must be in 1..6");
    if (stream.empty()) return {};

    PrincipleMarkPattern pattern = principle_marks(hash);
    std::size_t L = params.codeword_len;

    std::vector<SyncCandidate> hits;
    for (std::size_t t = 0; t < stream.size(); ++t) {
        int score = pattern_score(stream, pattern, t);
        int threshold = options.q_threshold;
        if (options.reduce_threshold_in_gaps && score < threshold) {
            // Pattern addresses lost to an erased stretch should not count
            // against the candidate; lower the bar by the number of pattern
            // taps inside gaps detected in this window.
            BitVec window(L);
            std::size_t marks = 0;
            for (std::size_t i = 0; i < L; ++i) {
                if (stream.test_or_zero(t + i)) {
                    window.set(i);
                    ++marks;
                }
            }
            if (marks > 0 && marks < L) {
                double density = static_cast<double>(marks) / static_cast<double>(L);
                auto gaps = find_gaps(window, gap_threshold(density, options.gap_false_positive_target, L));
                int in_gap = 0;
                for (auto a : pattern.addresses)
                    for (const auto& g : gaps)
                        if (g.contains(a)) ++in_gap;
                threshold -= in_gap;
            }
        }
        if (score >= threshold) hits.push_back(SyncCandidate{t, score});
    }

    std::stable_sort(hits.begin(), hits.end(), [](const SyncCandidate& a, const SyncCandidate& b) {
        return a.score != b.score ? a.score > b.score : a.offset < b.offset;
    });
    return hits;
}

std::array<double, 5> principle_mark_distribution(int m) {
    if (m < 1) throw Error("message count must be >= 1");

    // P(a)_i over a = 2..6, grown one message at a time with the quarter-rule
    // transition probabilities; the first message always fills one primary
    // and one secondary mark.
    std::array<double, 5> p{1.0, 0.0, 0.0, 0.0, 0.0};
    for (int i = 2; i <= m; ++i) {
        std::array<double, 5> q{};
        q[0] = p[0] * 0.25;                              // P(2|2)
        q[1] = p[0] * 0.25 + p[1] * 0.5;                 // P(3|2), P(3|3)
        q[2] = p[0] * 0.5 + p[1] * 0.0 + p[2] * 0.5;     // P(4|2), P(4|3)=0, P(4|4)
        q[3] = p[1] * 0.5 + p[2] * 0.5 + p[3] * 0.75;    // P(5|3), P(5|4), P(5|5)
        q[4] = p[3] * 0.25 + p[4];                       // P(6|5), P(6|6)=1
        p = q;
    }
    return p;
}

double expected_principle_marks(int m) {
    auto p = principle_mark_distribution(m);
    double sum = 0.0;
    for (int a = 0; a < 5; ++a) sum += static_cast<double>(a + 2) * p[static_cast<std::size_t>(a)];
    return sum;
}

double false_correlation_rate(int q, double mu, std::size_t L) {
    if (q < 1 || q > 6) throw Error("q must be in 1..6");
    if (mu < 0.0 || mu > 1.0) throw Error("mu must be in [0,1]");
    return static_cast<double>(L) * std::pow(mu, q);
}

double acceptable_noise(int q, double f_target, std::size_t L) {
    if (q < 1) throw Error("q must be >= 1");
    if (!(f_target > 0.0)) throw Error("f_target must be positive");
    return std::pow(f_target / static_cast<double>(L), 1.0 / static_cast<double>(q));
}

} // namespace ccode
