#include "ccode/codec.hpp"

#include <algorithm>
#include <cmath>

namespace ccode {

namespace {

// Bridged addresses as a bitmask for O(1) membership during tree expansion.
BitVec gap_mask(std::size_t len, const std::vector<GapRegion>& gaps) {
    BitVec mask(len);
    for (const auto& g : gaps)
        for (std::size_t i = g.start; i < g.end() && i < len; ++i) mask.set(i);
    return mask;
}

std::vector<GapRegion> resolve_gaps(const Codeword& cw, const DecodeOptions& options) {
    if (!options.bridge_gaps) return {};
    if (options.explicit_gaps) {
        auto gaps = *options.explicit_gaps;
        for (const auto& g : gaps)
            if (g.end() > cw.size()) throw Error("explicit gap region extends past the codeword");
        std::sort(gaps.begin(), gaps.end(),
                  [](const GapRegion& a, const GapRegion& b) { return a.start < b.start; });
        return gaps;
    }
    std::size_t marks = cw.count();
    // No statistics to detect gaps against in a degenerate codeword.
    if (marks == 0 || marks == cw.size()) return {};
    double density = static_cast<double>(marks) / static_cast<double>(cw.size());
    std::size_t min_len = gap_threshold(density, options.gap_false_positive_target, cw.size());
    return find_gaps(cw, min_len);
}

} // namespace

Codeword encode(std::span<const Message> messages, const HashFunction& hash,
                const CodeParams& params) {
    params.validate();
    if (hash.codeword_len() != params.codeword_len)
        throw Error("hash codeword length does not match params");

    Codeword cw(params.codeword_len);
    for (const auto& m : messages)
        for (const auto& p : message_prefixes(m, params)) cw.set(hash.address_of(p));
    return cw;
}

DecodeResult decode(const Codeword& codeword, const HashFunction& hash,
                    const CodeParams& params, const DecodeOptions& options) {
    params.validate();
    if (codeword.size() != params.codeword_len)
        throw Error("codeword length does not match params");
    if (hash.codeword_len() != params.codeword_len)
        throw Error("hash codeword length does not match params");
    if (options.gap_false_positive_target <= 0.0 || options.gap_false_positive_target >= 1.0)
        throw Error("gap_false_positive_target must be in (0,1)");

    DecodeResult result;
    result.gaps_used = resolve_gaps(codeword, options);
    BitVec bridged = gap_mask(codeword.size(), result.gaps_used);

    auto alive = [&](std::uint32_t address) {
        return codeword.test(address) || (options.bridge_gaps && bridged.test(address));
    };

    std::vector<std::uint64_t> branches{0};
    std::vector<std::uint64_t> next;
    for (int j = 1; j <= params.n_data; ++j) {
        next.clear();
        for (std::uint64_t b : branches) {
            for (std::uint64_t bit = 0; bit <= 1; ++bit) {
                std::uint64_t child = b | (bit << (j - 1));
                ++result.hash_calls;
                if (alive(hash.address_of(Prefix{child, j}))) next.push_back(child);
            }
        }
        branches.swap(next);
        result.live_branch_counts.push_back(branches.size());
    }

    if (params.n_checksum > 0) {
        next.clear();
        for (std::uint64_t b : branches) {
            std::uint64_t extended = b | (params.checksum_value << params.n_data);
            ++result.hash_calls;
            if (alive(hash.address_of(Prefix{extended, params.extended_bits()}))) next.push_back(b);
        }
        branches.swap(next);
        result.live_branch_counts.push_back(branches.size());
    }

    std::sort(branches.begin(), branches.end());
    result.messages.reserve(branches.size());
    for (std::uint64_t b : branches) result.messages.push_back(Message{b, params.n_data});
    return result;
}

std::vector<GapRegion> find_gaps(const Codeword& codeword, std::size_t min_gap_len) {
    if (min_gap_len < 1) throw Error("min_gap_len must be >= 1");

    std::vector<GapRegion> gaps;
    std::size_t run_start = 0;
    bool in_run = false;
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        if (!codeword.test(i)) {
            if (!in_run) {
                in_run = true;
                run_start = i;
            }
        } else if (in_run) {
            in_run = false;
            if (i - run_start >= min_gap_len) gaps.push_back(GapRegion{run_start, i - run_start});
        }
    }
    if (in_run && codeword.size() - run_start >= min_gap_len)
        gaps.push_back(GapRegion{run_start, codeword.size() - run_start});
    return gaps;
}

std::size_t gap_threshold(double mark_density, double false_positive_target, std::size_t L) {
    if (!(mark_density > 0.0) || !(mark_density < 1.0))
        throw Error("gap_threshold: degenerate mark density");
    if (!(false_positive_target > 0.0)) throw Error("gap_threshold: target must be positive");
    if (L < 1) throw Error("gap_threshold: empty codeword");

    double lf = static_cast<double>(L);
    if (lf * (1.0 - mark_density) <= false_positive_target) return 1;

    // L*(1-d)^g <= t  =>  g >= log(t/L) / log(1-d); nudge around the float
    // estimate so the returned g is exactly the smallest qualifying one.
    double est = std::log(false_positive_target / lf) / std::log1p(-mark_density);
    auto qualifies = [&](std::size_t g) {
        return lf * std::pow(1.0 - mark_density, static_cast<double>(g)) <= false_positive_target;
    };
    std::size_t g = est < 1.0 ? 1 : static_cast<std::size_t>(est);
    while (!qualifies(g)) ++g;
    while (g > 1 && qualifies(g - 1)) --g;
    return g;
}

} // namespace ccode
