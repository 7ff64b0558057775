#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ccode/params.hpp"

namespace ccode {

// Closed-form models for marks, computational load, signal-to-noise and
// processing gain, plus the decoded-error-fraction metric of the
// head-to-head experiments.

/// Hash calls per message feeding the mark model: N for k = 0, N+1 otherwise.
inline int n_eff_for(const CodeParams& params) { return params.hash_calls_per_message(); }

/// Z(m) = n_eff*m - m*log2(m) + 3m/2, the expected mark count for m random
/// distinct messages (statistical model, not an integer).
double expected_marks(std::size_t m, double n_eff);

/// hc(m) = 2*Z(m) + mu*Z(m).
double expected_hash_calls(std::size_t m, double mu, double n_eff);

/// S = Z(m) / (mu * (L - Z(m))); +infinity at mu = 0.
double signal_to_noise(std::size_t m, double mu, const CodeParams& params);
double noise_to_signal(std::size_t m, double mu, const CodeParams& params);

/// G_CDMA = 2^(N+k+1) / (m*N*f).
double processing_gain_cdma(std::size_t m, int n, int k, int f);

/// G_CC = 2^(N+k+1) / (N+k); independent of the message count.
double processing_gain_cc(int n, int k);

/// Hallucinations over total decoded. Empty decode of a non-empty truth
/// counts as 1.0.
double decoded_error_fraction_cc(std::span<const Message> truth, std::span<const Message> decoded);

/// Positionally wrong messages over m.
double decoded_error_fraction_cdma(std::span<const Message> truth, std::span<const Message> decoded);

// Decode load for A data bits sent one open message of A bits (2A calls)
// versus A/N closed messages (2*Z(A/N) calls with n_eff = N+1).
struct OpenClosedLoad {
    double open = 0.0;
    double closed = 0.0;
};
OpenClosedLoad open_vs_closed_hash_calls(std::size_t total_data_bits, int n, int k);

} // namespace ccode
