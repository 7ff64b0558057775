#include "ccode/hash.hpp"

#include <istream>
#include <numeric>
#include <ostream>

#include "ccode/rng.hpp"

namespace ccode {

namespace {

// Canonical prefix enumeration: lengths 1..max, values 0..2^len-1 within a
// length. Index of (len, value) is (2^len - 2) + value.
std::size_t prefix_index(const Prefix& p) {
    return (std::size_t{1} << p.length) - 2 + static_cast<std::size_t>(p.bits);
}

std::size_t prefix_domain_size(int max_prefix_len) {
    return (std::size_t{2} << max_prefix_len) - 2;  // 2^(max+1) - 2
}

void check_prefix(const Prefix& p, int max_len) {
    if (p.length < 1 || p.length > max_len) throw Error("prefix length outside the hash domain");
    if (p.length < 64 && (p.bits >> p.length) != 0)
        throw Error("prefix value has bits beyond its length");
}

void write_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void write_u64(std::ostream& out, std::uint64_t v) {
    write_u32(out, static_cast<std::uint32_t>(v));
    write_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) throw Error("truncated hash table stream");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t read_u64(std::istream& in) {
    std::uint64_t lo = read_u32(in);
    std::uint64_t hi = read_u32(in);
    return lo | (hi << 32);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

TableHash::TableHash(const CodeParams& params, std::uint64_t seed) {
    params.validate();
    n_data_ = params.n_data;
    n_checksum_ = params.n_checksum;
    max_prefix_len_ = params.extended_bits();
    codeword_len_ = params.codeword_len;
    seed_ = seed;

    std::size_t domain = prefix_domain_size(max_prefix_len_);
    if (domain > codeword_len_)
        throw Error("prefix domain exceeds codeword length; a collision-free table is impossible");
    if (codeword_len_ > kMaxCodewordLen)
        throw Error("codeword_len exceeds the desk-scale cap");

    std::vector<std::uint32_t> perm(codeword_len_);
    std::iota(perm.begin(), perm.end(), std::uint32_t{0});
    Rng rng(seed);
    shuffle(perm, rng);
    perm.resize(domain);
    table_ = std::move(perm);
}

std::uint32_t TableHash::address_of(const Prefix& p) const {
    check_prefix(p, max_prefix_len_);
    return table_[prefix_index(p)];
}

void TableHash::save(std::ostream& out) const {
    write_u32(out, static_cast<std::uint32_t>(n_data_));
    write_u32(out, static_cast<std::uint32_t>(n_checksum_));
    write_u32(out, static_cast<std::uint32_t>(codeword_len_));
    write_u64(out, seed_);
    for (auto a : table_) write_u32(out, a);
    if (!out) throw Error("failed to write hash table");
}

TableHash TableHash::load(std::istream& in) {
    TableHash h;
    h.n_data_ = static_cast<int>(read_u32(in));
    h.n_checksum_ = static_cast<int>(read_u32(in));
    h.codeword_len_ = read_u32(in);
    h.seed_ = read_u64(in);
    if (h.n_data_ < 1 || h.n_checksum_ < 0 || h.n_data_ + h.n_checksum_ > 62)
        throw Error("hash table header is invalid");
    h.max_prefix_len_ = h.n_data_ + h.n_checksum_;
    std::size_t domain = prefix_domain_size(h.max_prefix_len_);
    if (domain > h.codeword_len_) throw Error("hash table header is invalid");
    h.table_.resize(domain);
    for (auto& a : h.table_) {
        a = read_u32(in);
        if (a >= h.codeword_len_) throw Error("hash table entry out of range");
    }
    return h;
}

TableHash build_table_hash(const CodeParams& params, std::uint64_t seed) {
    return TableHash(params, seed);
}

ModularHash::ModularHash(std::size_t codeword_len, std::uint64_t seed)
    : codeword_len_(codeword_len), seed_(seed) {
    if (codeword_len < 2) throw Error("codeword_len must be >= 2");
}

std::uint32_t ModularHash::address_of(const Prefix& p) const {
    if (p.length < 1) throw Error("prefix length must be >= 1");
    std::uint64_t h = splitmix64(seed_ ^ splitmix64(static_cast<std::uint64_t>(p.length)));
    h = splitmix64(h ^ p.bits);
    return static_cast<std::uint32_t>(h % codeword_len_);
}

std::unique_ptr<HashFunction> make_hash(const CodeParams& params, std::uint64_t seed) {
    if (params.mode == CodeMode::closed)
        return std::make_unique<TableHash>(params, seed);
    return std::make_unique<ModularHash>(params.codeword_len, seed);
}

} // namespace ccode
