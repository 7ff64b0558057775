#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccode {

/// Error type thrown on contract violations throughout the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Word-packed dynamic bit array. Bit index 0 is codeword address 0.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n_bits) : nbits_(n_bits), words_(word_count(n_bits), 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                v.set(i);
            } else if (s[i] != '0') {
                throw Error("bit string may contain only '0' and '1'");
            }
        }
        return v;
    }

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    // Out-of-range indices read as zero; used by sliding correlation.
    bool test_or_zero(std::size_t i) const { return i < nbits_ && test(i); }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    double density() const { return nbits_ == 0 ? 0.0 : static_cast<double>(count()) / static_cast<double>(nbits_); }

    void or_with(const BitVec& other) {
        if (other.nbits_ != nbits_) throw Error("BitVec size mismatch in or_with");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }

    bool operator==(const BitVec& other) const = default;

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = 0; i < nbits_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// A codeword is a bit array of length L whose ones are indelible marks.
using Codeword = BitVec;

} // namespace ccode
