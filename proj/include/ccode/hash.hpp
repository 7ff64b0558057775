#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "ccode/params.hpp"

namespace ccode {

// Deterministic map from prefixes to codeword addresses.
class HashFunction {
public:
    virtual ~HashFunction() = default;

    /// Address in [0, codeword_len()) for the given prefix.
    virtual std::uint32_t address_of(const Prefix& p) const = 0;

    virtual std::size_t codeword_len() const = 0;
};

// Collision-free hash backed by a seeded pseudo-random partial permutation:
// the addresses [0, L) are shuffled with mt19937_64(seed) and the first
// 2^(N+k+1)-2 of them are assigned to prefixes in canonical order
// (length-major, then numeric value). Injective over the whole prefix domain
// and reconstructible from (params, seed).
class TableHash final : public HashFunction {
public:
    TableHash(const CodeParams& params, std::uint64_t seed);

    std::uint32_t address_of(const Prefix& p) const override;
    std::size_t codeword_len() const override { return codeword_len_; }

    std::uint64_t seed() const { return seed_; }
    int max_prefix_len() const { return max_prefix_len_; }
    std::size_t domain_size() const { return table_.size(); }

    // Binary dump: n, k, L as 32-bit little-endian, seed as 64-bit
    // little-endian, then one 32-bit little-endian address per prefix in
    // canonical order.
    void save(std::ostream& out) const;
    static TableHash load(std::istream& in);

private:
    TableHash() = default;

    int n_data_ = 0;
    int n_checksum_ = 0;
    int max_prefix_len_ = 0;
    std::size_t codeword_len_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::uint32_t> table_;
};

TableHash build_table_hash(const CodeParams& params, std::uint64_t seed);

// Hash for open codes, where a full table is unfeasible: a seeded integer
// mix of (length, bits) reduced mod L. Collisions are tolerated.
class ModularHash final : public HashFunction {
public:
    ModularHash(std::size_t codeword_len, std::uint64_t seed);

    std::uint32_t address_of(const Prefix& p) const override;
    std::size_t codeword_len() const override { return codeword_len_; }

    std::uint64_t seed() const { return seed_; }

private:
    std::size_t codeword_len_;
    std::uint64_t seed_;
};

// Hash choice implied by the params: TableHash for closed codes, ModularHash
// for open ones.
std::unique_ptr<HashFunction> make_hash(const CodeParams& params, std::uint64_t seed);

} // namespace ccode
