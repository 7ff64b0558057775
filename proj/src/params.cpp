#include "ccode/params.hpp"

#include <algorithm>

namespace ccode {

namespace {

std::uint64_t default_checksum(int k) {
    if (k <= 0) return 0;  // invalid k is rejected by validate() downstream
    return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

} // namespace

CodeParams CodeParams::closed_code(int n, int k) {
    return closed_code(n, k, default_checksum(k));
}

CodeParams CodeParams::closed_code(int n, int k, std::uint64_t checksum) {
    CodeParams p;
    p.n_data = n;
    p.n_checksum = k;
    p.mode = CodeMode::closed;
    p.checksum_value = checksum;
    if (n >= 1 && k >= 0 && n + k + 1 < 63) p.codeword_len = std::size_t{1} << (n + k + 1);
    p.validate();
    return p;
}

CodeParams CodeParams::open_code(int n, int k, std::size_t codeword_len) {
    return open_code(n, k, codeword_len, default_checksum(k));
}

CodeParams CodeParams::open_code(int n, int k, std::size_t codeword_len, std::uint64_t checksum) {
    CodeParams p;
    p.n_data = n;
    p.n_checksum = k;
    p.mode = CodeMode::open;
    p.checksum_value = checksum;
    p.codeword_len = codeword_len;
    p.validate();
    return p;
}

void CodeParams::validate() const {
    if (n_data < 1) throw Error("n_data must be >= 1");
    if (n_checksum < 0) throw Error("n_checksum must be >= 0");
    if (codeword_len < 2) throw Error("codeword_len must be >= 2");
    if (n_data + n_checksum > 62) throw Error("n_data + n_checksum beyond 62 bits is unsupported");
    if (n_checksum < 64 && (checksum_value >> n_checksum) != 0)
        throw Error("checksum_value does not fit in n_checksum bits");
    if (mode == CodeMode::closed) {
        int ext = n_data + n_checksum + 1;
        if (ext >= 63 || (std::size_t{1} << ext) != codeword_len)
            throw Error("closed mode requires codeword_len = 2^(N+k+1)");
        if (codeword_len > kMaxCodewordLen)
            throw Error("codeword_len exceeds the desk-scale cap");
    }
}

Message parse_message(std::string_view text) {
    if (text.empty() || text.size() > 62) throw Error("message must be 1..62 bits");
    Message m;
    m.n_bits = static_cast<int>(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') throw Error("message may contain only '0' and '1'");
        if (c == '1') m.value |= std::uint64_t{1} << (text.size() - 1 - i);
    }
    return m;
}

std::string format_message(const Message& m) {
    std::string s(static_cast<std::size_t>(m.n_bits), '0');
    for (int i = 0; i < m.n_bits; ++i)
        if ((m.value >> i) & 1) s[static_cast<std::size_t>(m.n_bits - 1 - i)] = '1';
    return s;
}

std::vector<Prefix> message_prefixes(const Message& m, const CodeParams& params) {
    if (m.n_bits != params.n_data) throw Error("message length does not match params.n_data");
    if (params.n_data < 64 && (m.value >> params.n_data) != 0)
        throw Error("message value has bits beyond n_data");

    std::vector<Prefix> prefixes;
    prefixes.reserve(static_cast<std::size_t>(params.n_data) + 1);
    for (int j = 1; j <= params.n_data; ++j) {
        std::uint64_t mask = (j >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << j) - 1);
        prefixes.push_back(Prefix{m.value & mask, j});
    }
    if (params.n_checksum > 0) {
        std::uint64_t extended = m.value | (params.checksum_value << params.n_data);
        prefixes.push_back(Prefix{extended, params.extended_bits()});
    }
    return prefixes;
}

} // namespace ccode
