#include "ccode/channel.hpp"

#include <cmath>

#include "ccode/rng.hpp"

namespace ccode {

namespace {

std::size_t noise_count(double mu, std::size_t L) {
    if (mu < 0.0 || mu > 1.0) throw Error("noise fraction must be in [0,1]");
    return static_cast<std::size_t>(std::llround(mu * static_cast<double>(L)));
}

} // namespace

Codeword add_noise(const Codeword& codeword, double mu, std::uint64_t seed) {
    std::size_t count = noise_count(mu, codeword.size());
    Codeword out = codeword;
    Rng rng(seed);
    for (auto pos : sample_indices(codeword.size(), count, rng)) out.set(pos);
    return out;
}

Codeword flip_noise(const Codeword& codeword, double mu, std::uint64_t seed) {
    std::size_t count = noise_count(mu, codeword.size());
    Codeword out = codeword;
    Rng rng(seed);
    for (auto pos : sample_indices(codeword.size(), count, rng)) out.flip(pos);
    return out;
}

Codeword burst_erase(const Codeword& codeword, double gap_fraction,
                     std::optional<std::size_t> start, std::uint64_t seed) {
    if (gap_fraction < 0.0 || gap_fraction > 1.0) throw Error("gap fraction must be in [0,1]");
    std::size_t L = codeword.size();
    std::size_t len = static_cast<std::size_t>(std::llround(gap_fraction * static_cast<double>(L)));
    if (len == 0) return codeword;

    std::size_t begin;
    if (start) {
        begin = *start;
        if (begin + len > L) throw Error("burst region does not fit in the codeword");
    } else {
        Rng rng(seed);
        begin = static_cast<std::size_t>(bounded(rng, L - len + 1));
    }

    Codeword out = codeword;
    for (std::size_t i = begin; i < begin + len; ++i) out.reset(i);
    return out;
}

Codeword apply_channel(const Codeword& codeword, const ChannelSpec& spec) {
    Codeword out = codeword;
    if (spec.noise_fraction > 0.0) out = add_noise(out, spec.noise_fraction, spec.seed);
    if (spec.gap_fraction > 0.0) out = burst_erase(out, spec.gap_fraction, spec.burst_start, spec.seed + 1);
    return out;
}

} // namespace ccode
