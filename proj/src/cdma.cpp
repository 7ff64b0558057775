#include "ccode/cdma.hpp"

#include <bit>

#include "ccode/rng.hpp"

namespace ccode {

namespace {

// Layout (p1, p2, d0, p3, d1, d2, d3, P); bit i of the byte = position i.
constexpr int kData[4] = {2, 4, 5, 6};

int bit(std::uint8_t v, int i) { return (v >> i) & 1; }

// Syndrome over the (7,4) part: parity groups by position index (1-based).
int syndrome7(std::uint8_t r) {
    int s1 = bit(r, 0) ^ bit(r, 2) ^ bit(r, 4) ^ bit(r, 6);
    int s2 = bit(r, 1) ^ bit(r, 2) ^ bit(r, 5) ^ bit(r, 6);
    int s3 = bit(r, 3) ^ bit(r, 4) ^ bit(r, 5) ^ bit(r, 6);
    return s1 | (s2 << 1) | (s3 << 2);
}

std::uint8_t extract_nibble(std::uint8_t r) {
    std::uint8_t n = 0;
    for (int i = 0; i < 4; ++i) n |= static_cast<std::uint8_t>(bit(r, kData[i]) << i);
    return n;
}

// Per-slot balanced chip sequences, one shuffled run per slot in slot order,
// shared by encoder and decoder through the seed.
std::vector<std::vector<std::uint8_t>> make_chips(const CdmaParams& params) {
    std::size_t slots = params.m * static_cast<std::size_t>(params.n_data) *
                        static_cast<std::size_t>(params.f_expansion);
    std::size_t G = params.chip_len();
    Rng rng(params.spreading_seed);
    std::vector<std::vector<std::uint8_t>> chips(slots);
    for (auto& c : chips) {
        c.assign(G, 0);
        if (G > 1) {
            for (std::size_t i = 0; i < G / 2; ++i) c[i] = 1;
            shuffle(c, rng);
        }
    }
    return chips;
}

} // namespace

std::uint8_t hamming84_encode(std::uint8_t nibble) {
    if (nibble > 15) throw Error("hamming84_encode: input must be 4 bits");
    int d0 = bit(nibble, 0), d1 = bit(nibble, 1), d2 = bit(nibble, 2), d3 = bit(nibble, 3);
    int p1 = d0 ^ d1 ^ d3;
    int p2 = d0 ^ d2 ^ d3;
    int p3 = d1 ^ d2 ^ d3;
    std::uint8_t word = static_cast<std::uint8_t>(p1 | (p2 << 1) | (d0 << 2) | (p3 << 3) |
                                                  (d1 << 4) | (d2 << 5) | (d3 << 6));
    int overall = std::popcount(static_cast<unsigned>(word)) & 1;
    return static_cast<std::uint8_t>(word | (overall << 7));
}

HammingDecode hamming84_decode(std::uint8_t received) {
    int s = syndrome7(received);
    int parity = std::popcount(static_cast<unsigned>(received)) & 1;

    std::uint8_t corrected = received;
    HammingStatus status;
    if (s == 0 && parity == 0) {
        status = HammingStatus::clean;
    } else if (parity == 1) {
        // Odd overall parity: a single error, at position s (or at the
        // overall parity bit itself when s == 0).
        corrected = static_cast<std::uint8_t>(received ^ (1u << (s == 0 ? 7 : s - 1)));
        status = HammingStatus::corrected;
    } else {
        // Even parity with nonzero syndrome: a double error. Resolve to the
        // nearest word by syndrome so the result is deterministic.
        corrected = static_cast<std::uint8_t>(received ^ (1u << (s - 1)));
        status = HammingStatus::detected_uncorrectable;
    }
    return HammingDecode{extract_nibble(corrected), status};
}

std::vector<std::uint8_t> interleave(std::span<const std::uint8_t> bits, std::size_t block_count) {
    if (bits.size() != block_count * 8) throw Error("interleave: input length must be 8*block_count");
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t b = 0; b < block_count; ++b)
        for (std::size_t j = 0; j < 8; ++j) out[j * block_count + b] = bits[b * 8 + j];
    return out;
}

std::vector<std::uint8_t> deinterleave(std::span<const std::uint8_t> bits, std::size_t block_count) {
    if (bits.size() != block_count * 8) throw Error("deinterleave: input length must be 8*block_count");
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t b = 0; b < block_count; ++b)
        for (std::size_t j = 0; j < 8; ++j) out[b * 8 + j] = bits[j * block_count + b];
    return out;
}

std::size_t CdmaParams::chip_len() const {
    std::size_t encoded_bits = m * static_cast<std::size_t>(n_data) * static_cast<std::size_t>(f_expansion);
    return encoded_bits == 0 ? 0 : codeword_len / encoded_bits;
}

std::size_t CdmaParams::spread_len() const {
    return m * static_cast<std::size_t>(n_data) * static_cast<std::size_t>(f_expansion) * chip_len();
}

void CdmaParams::validate() const {
    if (m < 1) throw Error("CdmaParams: m must be >= 1");
    if (n_data != 8) throw Error("CdmaParams: the baseline uses 8-bit messages");
    if (f_expansion != 2) throw Error("CdmaParams: the baseline uses the (8,4) Hamming code, f = 2");
    if (codeword_len < 2) throw Error("CdmaParams: codeword_len must be >= 2");
    if (chip_len() < 1) throw Error("CdmaParams: too many messages for the codeword length");
}

Codeword cdma_encode(std::span<const Message> messages, const CdmaParams& params) {
    params.validate();
    if (messages.size() != params.m) throw Error("cdma_encode: message count must equal params.m");

    std::size_t B = 2 * params.m;  // two Hamming blocks per message
    std::vector<std::uint8_t> stream;
    stream.reserve(B * 8);
    for (const auto& msg : messages) {
        if (msg.n_bits != params.n_data) throw Error("cdma_encode: message length mismatch");
        std::uint8_t lo = hamming84_encode(static_cast<std::uint8_t>(msg.value & 15));
        std::uint8_t hi = hamming84_encode(static_cast<std::uint8_t>((msg.value >> 4) & 15));
        for (int i = 0; i < 8; ++i) stream.push_back(static_cast<std::uint8_t>(bit(lo, i)));
        for (int i = 0; i < 8; ++i) stream.push_back(static_cast<std::uint8_t>(bit(hi, i)));
    }
    std::vector<std::uint8_t> inter = interleave(stream, B);

    std::size_t G = params.chip_len();
    auto chips = make_chips(params);
    Codeword cw(params.codeword_len);
    for (std::size_t t = 0; t < inter.size(); ++t)
        for (std::size_t i = 0; i < G; ++i)
            if (inter[t] ^ chips[t][i]) cw.set(t * G + i);
    return cw;
}

std::vector<Message> cdma_decode(const Codeword& codeword, const CdmaParams& params) {
    params.validate();
    if (codeword.size() != params.codeword_len)
        throw Error("cdma_decode: codeword length does not match params");

    std::size_t B = 2 * params.m;
    std::size_t G = params.chip_len();
    auto chips = make_chips(params);

    std::vector<std::uint8_t> inter(B * 8);
    for (std::size_t t = 0; t < inter.size(); ++t) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < G; ++i)
            ones += static_cast<std::size_t>(codeword.test(t * G + i) ^ (chips[t][i] != 0));
        inter[t] = static_cast<std::uint8_t>(2 * ones > G ? 1 : 0);  // tie decodes to 0
    }
    std::vector<std::uint8_t> stream = deinterleave(inter, B);

    std::vector<Message> out;
    out.reserve(params.m);
    for (std::size_t msg = 0; msg < params.m; ++msg) {
        std::uint8_t words[2] = {0, 0};
        for (int half = 0; half < 2; ++half)
            for (int i = 0; i < 8; ++i)
                words[half] |= static_cast<std::uint8_t>(stream[msg * 16 + half * 8 + static_cast<std::size_t>(i)] << i);
        std::uint8_t lo = hamming84_decode(words[0]).nibble;
        std::uint8_t hi = hamming84_decode(words[1]).nibble;
        out.push_back(Message{static_cast<std::uint64_t>(lo | (hi << 4)), params.n_data});
    }
    return out;
}

} // namespace ccode
