#include "ccode/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace ccode {

double expected_marks(std::size_t m, double n_eff) {
    if (m < 1) throw Error("expected_marks: m must be >= 1");
    double md = static_cast<double>(m);
    return n_eff * md - md * std::log2(md) + 1.5 * md;
}

double expected_hash_calls(std::size_t m, double mu, double n_eff) {
    if (mu < 0.0 || mu > 1.0) throw Error("expected_hash_calls: mu must be in [0,1]");
    return (2.0 + mu) * expected_marks(m, n_eff);
}

double signal_to_noise(std::size_t m, double mu, const CodeParams& params) {
    double z = expected_marks(m, n_eff_for(params));
    double lf = static_cast<double>(params.codeword_len);
    if (!(z < lf)) throw Error("signal_to_noise: expected marks reach the codeword size");
    if (mu < 0.0 || mu > 0.5) throw Error("signal_to_noise: mu must be in [0, 0.5]");
    if (mu == 0.0) return std::numeric_limits<double>::infinity();
    return z / (mu * (lf - z));
}

double noise_to_signal(std::size_t m, double mu, const CodeParams& params) {
    double s = signal_to_noise(m, mu, params);
    return std::isinf(s) ? 0.0 : 1.0 / s;
}

double processing_gain_cdma(std::size_t m, int n, int k, int f) {
    if (m < 1) throw Error("processing_gain_cdma: m must be >= 1");
    if (n < 1 || k < 0 || f < 1) throw Error("processing_gain_cdma: bad code parameters");
    return std::exp2(n + k + 1) / (static_cast<double>(m) * n * f);
}

double processing_gain_cc(int n, int k) {
    if (n < 1 || k < 0) throw Error("processing_gain_cc: bad code parameters");
    return std::exp2(n + k + 1) / static_cast<double>(n + k);
}

double decoded_error_fraction_cc(std::span<const Message> truth, std::span<const Message> decoded) {
    if (decoded.empty()) return truth.empty() ? 0.0 : 1.0;
    std::set<Message> truth_set(truth.begin(), truth.end());
    std::size_t hallucinations = 0;
    for (const auto& m : decoded)
        if (!truth_set.contains(m)) ++hallucinations;
    return static_cast<double>(hallucinations) / static_cast<double>(decoded.size());
}

double decoded_error_fraction_cdma(std::span<const Message> truth, std::span<const Message> decoded) {
    if (truth.size() != decoded.size())
        throw Error("decoded_error_fraction_cdma: positional comparison needs equal sizes");
    if (truth.empty()) return 0.0;
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (!(truth[i] == decoded[i])) ++wrong;
    return static_cast<double>(wrong) / static_cast<double>(truth.size());
}

OpenClosedLoad open_vs_closed_hash_calls(std::size_t total_data_bits, int n, int k) {
    if (n < 1 || total_data_bits < 1 || total_data_bits % static_cast<std::size_t>(n) != 0)
        throw Error("open_vs_closed_hash_calls: total data bits must be a positive multiple of N");
    if (k < 0) throw Error("open_vs_closed_hash_calls: k must be >= 0");
    OpenClosedLoad load;
    load.open = 2.0 * static_cast<double>(total_data_bits);
    std::size_t m = total_data_bits / static_cast<std::size_t>(n);
    load.closed = 2.0 * expected_marks(m, n + (k > 0 ? 1 : 0));
    return load;
}

} // namespace ccode
