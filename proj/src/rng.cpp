#include "ccode/rng.hpp"

#include <numeric>

#include "ccode/bitvec.hpp"

namespace ccode {

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count, Rng& rng) {
    if (count > n) throw Error("sample_indices: count exceeds population");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

std::vector<Message> sample_messages(std::size_t count, int n_bits, Rng& rng) {
    if (n_bits < 1 || n_bits > 62) throw Error("sample_messages: n_bits must be 1..62");
    std::size_t space = std::size_t{1} << n_bits;
    if (count > space) throw Error("sample_messages: more distinct messages than the space holds");

    std::vector<Message> out;
    out.reserve(count);
    if (n_bits <= 20 && count * 4 >= space) {
        // Dense draw: permute the whole space.
        auto idx = sample_indices(space, count, rng);
        for (auto v : idx) out.push_back(Message{static_cast<std::uint64_t>(v), n_bits});
    } else {
        // Sparse draw: rejection sampling.
        std::vector<bool> seen;
        if (n_bits <= 24) seen.assign(space, false);
        std::uint64_t mask = (n_bits >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_bits) - 1);
        while (out.size() < count) {
            std::uint64_t v = rng() & mask;
            if (!seen.empty()) {
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = true;
            } else {
                bool dup = false;
                for (const auto& m : out) dup = dup || m.value == v;
                if (dup) continue;
            }
            out.push_back(Message{v, n_bits});
        }
    }
    return out;
}

} // namespace ccode
