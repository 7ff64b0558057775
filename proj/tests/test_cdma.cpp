#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <vector>

#include "ccode/cdma.hpp"
#include "ccode/channel.hpp"
#include "ccode/rng.hpp"

using namespace ccode;

namespace {

int hamming_distance(std::uint8_t a, std::uint8_t b) {
    return std::popcount(static_cast<unsigned>(a ^ b));
}

std::vector<Message> random_messages(std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    return sample_messages(m, 8, rng);
}

} // namespace

TEST_CASE("hamming84 zero and ones words") {
    CHECK(hamming84_encode(0x0) == 0x00);
    CHECK(hamming84_encode(0xF) == 0xFF);
}

TEST_CASE("hamming84 codebook has minimum distance four") {
    // independent pairwise scan over the full codebook
    for (std::uint8_t a = 0; a < 16; ++a)
        for (std::uint8_t b = 0; b < 16; ++b)
            if (a != b) CHECK(hamming_distance(hamming84_encode(a), hamming84_encode(b)) >= 4);
}

TEST_CASE("hamming84 round trips cleanly") {
    for (std::uint8_t x = 0; x < 16; ++x) {
        auto d = hamming84_decode(hamming84_encode(x));
        CHECK(d.nibble == x);
        CHECK(d.status == HammingStatus::clean);
    }
}

TEST_CASE("hamming84 corrects every single-bit corruption") {
    for (std::uint8_t x = 0; x < 16; ++x) {
        std::uint8_t cw = hamming84_encode(x);
        for (int bit = 0; bit < 8; ++bit) {
            auto d = hamming84_decode(static_cast<std::uint8_t>(cw ^ (1u << bit)));
            CHECK(d.nibble == x);
            CHECK(d.status == HammingStatus::corrected);
        }
    }
}

TEST_CASE("hamming84 flags every double-bit corruption") {
    for (std::uint8_t x = 0; x < 16; ++x) {
        std::uint8_t cw = hamming84_encode(x);
        for (int b1 = 0; b1 < 8; ++b1)
            for (int b2 = b1 + 1; b2 < 8; ++b2) {
                auto d = hamming84_decode(static_cast<std::uint8_t>(cw ^ (1u << b1) ^ (1u << b2)));
                CHECK(d.status == HammingStatus::detected_uncorrectable);
            }
    }
}

TEST_CASE("hamming84 double-error resolution is deterministic") {
    auto a = hamming84_decode(0b00000011);
    auto b = hamming84_decode(0b00000011);
    CHECK(a.nibble == b.nibble);
    CHECK(a.status == HammingStatus::detected_uncorrectable);
}

TEST_CASE("interleave layout") {
    std::vector<std::uint8_t> one{1, 0, 1, 1, 0, 0, 1, 0};
    CHECK(interleave(one, 1) == one);  // B = 1 is the identity

    // B = 2: b0[0] b1[0] b0[1] b1[1] ...
    std::vector<std::uint8_t> two(16);
    for (int i = 0; i < 8; ++i) two[static_cast<std::size_t>(i)] = 1;  // block 0 all ones
    auto inter = interleave(two, 2);
    for (std::size_t i = 0; i < 16; ++i) CHECK(inter[i] == (i % 2 == 0 ? 1 : 0));

    CHECK_THROWS_AS(interleave(two, 3), Error);
}

TEST_CASE("deinterleave inverts interleave") {
    Rng rng(12);
    for (std::size_t B : {1u, 2u, 5u, 16u, 256u}) {
        std::vector<std::uint8_t> bits(8 * B);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        CHECK(deinterleave(interleave(bits, B), B) == bits);
    }
}

TEST_CASE("a contiguous erasure of at most B interleaved positions hits each block at most once") {
    const std::size_t B = 16;
    for (std::size_t start = 0; start + B <= 8 * B; ++start) {
        std::vector<int> hits(B, 0);
        for (std::size_t t = start; t < start + B; ++t) ++hits[t % B];
        for (auto h : hits) CHECK(h <= 1);
    }
}

TEST_CASE("CdmaParams processing-gain geometry") {
    CdmaParams p;
    p.m = 16;
    CHECK(p.chip_len() == 8);
    CHECK(p.spread_len() == 2048);
    p.m = 128;
    CHECK(p.chip_len() == 1);
    p.m = 10;  // non-power-of-two rounds the chip length down and pads
    CHECK(p.chip_len() == 12);
    CHECK(p.spread_len() == 1920);
    p.m = 129;
    CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("cdma round trip is exact for every power-of-two message count") {
    for (std::size_t m = 1; m <= 128; m *= 2) {
        CdmaParams p;
        p.m = m;
        p.spreading_seed = 1000 + m;
        auto msgs = random_messages(m, 17 * m + 1);
        auto decoded = cdma_decode(cdma_encode(msgs, p), p);
        REQUIRE(decoded.size() == m);
        for (std::size_t i = 0; i < m; ++i) CHECK(decoded[i] == msgs[i]);
    }
}

TEST_CASE("cdma round trip with a padded tail (m = 10)") {
    CdmaParams p;
    p.m = 10;
    p.spreading_seed = 5;
    auto msgs = random_messages(10, 55);
    auto cw = cdma_encode(msgs, p);
    // the unused tail stays zero
    for (std::size_t i = p.spread_len(); i < p.codeword_len; ++i) CHECK_FALSE(cw.test(i));
    auto decoded = cdma_decode(cw, p);
    REQUIRE(decoded.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(decoded[i] == msgs[i]);
}

TEST_CASE("all-zero nibbles with zero-chip slots give the all-zero codeword") {
    CdmaParams p;
    p.m = 128;  // G = 1 uses the single chip 0
    std::vector<Message> zeros(128, Message{0, 8});
    CHECK(cdma_encode(zeros, p).count() == 0);
}

TEST_CASE("balanced chips put the mark count near half the codeword") {
    // With random data the encoded stream is half ones in expectation;
    // spreading with balanced chips keeps it there.
    double expect = 1024.0;
    double band = 2.0 * std::sqrt(2048.0);
    for (std::size_t m : {2u, 16u, 128u}) {
        double total = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            CdmaParams p;
            p.m = m;
            p.spreading_seed = static_cast<std::uint64_t>(rep) * 31 + m;
            total += static_cast<double>(cdma_encode(random_messages(m, 7 * m + static_cast<std::size_t>(rep)), p).count());
        }
        CHECK(std::abs(total / 20.0 - expect) < band);
    }
}

TEST_CASE("burst tolerance boundary: one interleaving span is always absorbed") {
    // gaps up to B*G positions erase at most one bit per Hamming block
    CdmaParams p;
    p.m = 8;
    p.spreading_seed = 99;
    auto msgs = random_messages(8, 1234);
    auto cw = cdma_encode(msgs, p);
    std::size_t span = 2 * p.m * p.chip_len();  // 256 = 12.5% of 2048
    REQUIRE(span == 256);
    for (std::size_t start = 0; start + span <= 2048; start += 3) {
        Codeword erased = cw;
        for (std::size_t i = start; i < start + span; ++i) erased.reset(i);
        auto decoded = cdma_decode(erased, p);
        bool all_ok = true;
        for (std::size_t i = 0; i < 8; ++i) all_ok = all_ok && decoded[i] == msgs[i];
        CHECK(all_ok);
    }
}

TEST_CASE("bursts of twice the interleaving span corrupt some placement") {
    CdmaParams p;
    p.m = 8;
    p.spreading_seed = 7;
    auto msgs = random_messages(8, 4321);
    auto cw = cdma_encode(msgs, p);
    std::size_t span = 2 * (2 * p.m * p.chip_len());
    bool any_error = false;
    for (std::size_t start = 0; start + span <= 2048 && !any_error; start += 16) {
        Codeword erased = cw;
        for (std::size_t i = start; i < start + span; ++i) erased.reset(i);
        auto decoded = cdma_decode(erased, p);
        for (std::size_t i = 0; i < 8; ++i) any_error = any_error || !(decoded[i] == msgs[i]);
    }
    CHECK(any_error);
}

TEST_CASE("heavy flip noise destroys CDMA decoding") {
    CdmaParams p;
    p.m = 2;
    p.spreading_seed = 3;
    double err = 0.0;
    const int reps = 40;
    for (int rep = 0; rep < reps; ++rep) {
        auto msgs = random_messages(2, 100 + static_cast<std::size_t>(rep));
        p.spreading_seed = static_cast<std::uint64_t>(rep);
        auto cw = cdma_encode(msgs, p);
        auto noisy = flip_noise(cw, 0.45, static_cast<std::uint64_t>(rep) + 77);
        auto decoded = cdma_decode(noisy, p);
        for (std::size_t i = 0; i < 2; ++i) err += decoded[i] == msgs[i] ? 0.0 : 0.5;
    }
    CHECK(err / reps > 0.8);
}

TEST_CASE("cdma_encode validates its inputs") {
    CdmaParams p;
    p.m = 4;
    auto msgs = random_messages(3, 9);
    CHECK_THROWS_AS(cdma_encode(msgs, p), Error);
    std::vector<Message> wrong{Message{1, 7}, Message{2, 8}, Message{3, 8}, Message{4, 8}};
    CHECK_THROWS_AS(cdma_encode(wrong, p), Error);
}
