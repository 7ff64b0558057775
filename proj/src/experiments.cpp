#include "ccode/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <tuple>

#include "ccode/analysis.hpp"
#include "ccode/cdma.hpp"
#include "ccode/channel.hpp"
#include "ccode/codec.hpp"
#include "ccode/hash.hpp"
#include "ccode/rng.hpp"
#include "ccode/sync.hpp"

namespace ccode {

namespace {

// Independent sub-streams per repeat, derived from seed_i = master + repeat.
std::uint64_t sub_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t x = base ^ (tag * 0x9e3779b97f4a7c15ULL);
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t kTagHash = 1;
constexpr std::uint64_t kTagMessages = 2;
constexpr std::uint64_t kTagNoise = 3;
constexpr std::uint64_t kTagBurst = 4;
constexpr std::uint64_t kTagChips = 5;

struct Emitter {
    std::vector<MetricRecord>& rows;
    std::string experiment;
    std::uint64_t master_seed;

    MetricRecord base(const std::string& metric) const {
        MetricRecord r;
        r.experiment = experiment;
        r.metric = metric;
        r.seed = master_seed;
        return r;
    }

    void point(MetricRecord r, long repeat, double value) {
        r.repeat = repeat;
        r.value = value;
        rows.push_back(std::move(r));
    }

    // Per-repeat rows followed by the mean row (repeat = -1).
    void series(const MetricRecord& proto, const std::vector<double>& values) {
        double sum = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            point(proto, static_cast<long>(i), values[i]);
            sum += values[i];
        }
        point(proto, -1, values.empty() ? 0.0 : sum / static_cast<double>(values.size()));
    }
};

struct CcDraw {
    TableHash hash;
    std::vector<Message> messages;
    Codeword codeword;
};

CcDraw draw_cc(const CodeParams& params, std::size_t m, std::uint64_t base_seed) {
    TableHash hash(params, sub_seed(base_seed, kTagHash));
    Rng msg_rng(sub_seed(base_seed, kTagMessages));
    auto messages = sample_messages(m, params.n_data, msg_rng);
    auto cw = encode(messages, hash, params);
    return CcDraw{std::move(hash), std::move(messages), std::move(cw)};
}

std::size_t count_hallucinations(std::span<const Message> truth, std::span<const Message> decoded) {
    std::size_t h = 0;
    for (const auto& d : decoded)
        if (std::find(truth.begin(), truth.end(), d) == truth.end()) ++h;
    return h;
}

std::vector<double> mu_grid(double step, double max) {
    std::vector<double> grid;
    for (int i = 0; step * i <= max + 1e-9; ++i) grid.push_back(step * i);
    return grid;
}

const std::vector<std::size_t> kPowersOfTwo{1, 2, 4, 8, 16, 32, 64, 128};

void fig2(Emitter& em, const ExperimentConfig&) {
    const int n = 8, k = 2;
    for (std::size_t m : kPowersOfTwo) {
        std::size_t a = m * 8;
        auto load = open_vs_closed_hash_calls(a, n, k);
        MetricRecord open_row = em.base("open_hash_calls");
        open_row.m = m;
        open_row.n = n;
        open_row.k = k;
        open_row.codeword_bits = 2048;
        em.series(open_row, {load.open});
        MetricRecord closed_row = open_row;
        closed_row.metric = "closed_hash_calls";
        em.series(closed_row, {load.closed});
    }
}

void fig3(Emitter& em, const ExperimentConfig& cfg) {
    auto params = CodeParams::closed_code(8, 2);
    int repeats = cfg.repeats.value_or(30);
    const std::vector<std::size_t> ms{1, 2, 4, 8, 16, 32, 64, 100, 128};
    for (double mu : {0.0, 0.3}) {
        for (std::size_t m : ms) {
            std::vector<double> calls, marks;
            for (int rep = 0; rep < repeats; ++rep) {
                std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
                auto draw = draw_cc(params, m, base);
                auto received = add_noise(draw.codeword, mu, sub_seed(base, kTagNoise));
                auto result = decode(received, draw.hash, params);
                calls.push_back(static_cast<double>(result.hash_calls));
                marks.push_back(static_cast<double>(draw.codeword.count()));
            }
            MetricRecord proto = em.base("hash_calls");
            proto.m = m;
            proto.mu = mu;
            proto.n = params.n_data;
            proto.k = params.n_checksum;
            proto.codeword_bits = params.codeword_len;
            em.series(proto, calls);
            MetricRecord model = proto;
            model.metric = "hash_calls_model";
            em.series(model, {expected_hash_calls(m, mu, n_eff_for(params))});
            MetricRecord marks_row = proto;
            marks_row.metric = "marks";
            em.series(marks_row, marks);
        }
    }
}

void fig4(Emitter& em, const ExperimentConfig&) {
    auto params = CodeParams::closed_code(8, 2);
    for (double mu : {0.1, 0.2, 0.3, 0.4, 0.5}) {
        for (std::size_t m = 1; m <= 128; m *= 2) {
            MetricRecord row = em.base("noise_to_signal");
            row.m = m;
            row.mu = mu;
            row.n = params.n_data;
            row.k = params.n_checksum;
            row.codeword_bits = params.codeword_len;
            em.series(row, {noise_to_signal(m, mu, params)});
        }
    }
}

void fig5(Emitter& em, const ExperimentConfig& cfg) {
    int repeats = cfg.repeats.value_or(30);
    std::size_t m = cfg.m.value_or(10);
    for (int k : {0, 2}) {
        auto params = CodeParams::closed_code(8, k);
        for (double mu : mu_grid(0.05, 0.5)) {
            std::vector<double> halluc;
            for (int rep = 0; rep < repeats; ++rep) {
                std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
                auto draw = draw_cc(params, m, base);
                auto received = add_noise(draw.codeword, mu, sub_seed(base, kTagNoise));
                auto result = decode(received, draw.hash, params);
                halluc.push_back(static_cast<double>(count_hallucinations(draw.messages, result.messages)));
            }
            MetricRecord proto = em.base("hallucinations");
            proto.m = m;
            proto.mu = mu;
            proto.n = params.n_data;
            proto.k = params.n_checksum;
            proto.codeword_bits = params.codeword_len;
            em.series(proto, halluc);
        }
    }
}

void fig7(Emitter& em, const ExperimentConfig& cfg) {
    auto params = CodeParams::closed_code(8, 2);
    int repeats = cfg.repeats.value_or(30);
    for (std::size_t m = 1; m <= 16; ++m) {
        std::vector<double> scores;
        for (int rep = 0; rep < repeats; ++rep) {
            std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
            auto draw = draw_cc(params, m, base);
            auto pattern = principle_marks(draw.hash);
            scores.push_back(static_cast<double>(pattern_score(draw.codeword, pattern, 0)));
        }
        MetricRecord proto = em.base("correlation");
        proto.m = m;
        proto.n = params.n_data;
        proto.k = params.n_checksum;
        proto.codeword_bits = params.codeword_len;
        em.series(proto, scores);
        MetricRecord model = proto;
        model.metric = "correlation_model";
        em.series(model, {expected_principle_marks(static_cast<int>(m))});
    }
}

void fig8(Emitter& em, const ExperimentConfig& cfg) {
    auto params = CodeParams::closed_code(8, 2);
    int repeats = cfg.repeats.value_or(100);
    const int q = 5;
    for (double mu : mu_grid(0.05, 0.5)) {
        std::vector<double> counts;
        for (int rep = 0; rep < repeats; ++rep) {
            std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
            TableHash hash(params, sub_seed(base, kTagHash));
            auto pattern = principle_marks(hash);
            Codeword noise = add_noise(Codeword(params.codeword_len), mu, sub_seed(base, kTagNoise));
            std::size_t count = 0;
            for (std::size_t t = 0; t < noise.size(); ++t)
                if (pattern_score(noise, pattern, t) >= q) ++count;
            counts.push_back(static_cast<double>(count));
        }
        MetricRecord proto = em.base("false_correlations");
        proto.mu = mu;
        proto.n = params.n_data;
        proto.k = params.n_checksum;
        proto.codeword_bits = params.codeword_len;
        em.series(proto, counts);
        MetricRecord model = proto;
        model.metric = "false_correlations_model";
        em.series(model, {false_correlation_rate(q, mu, params.codeword_len)});
    }
}

void fig9(Emitter& em, const ExperimentConfig& cfg) {
    auto params = CodeParams::closed_code(8, 2);
    int repeats = cfg.repeats.value_or(50);
    std::size_t m = cfg.m.value_or(10);
    for (double mu : mu_grid(0.05, 0.5)) {
        std::vector<double> cc_err, cdma_err;
        for (int rep = 0; rep < repeats; ++rep) {
            std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
            auto draw = draw_cc(params, m, base);
            auto received = add_noise(draw.codeword, mu, sub_seed(base, kTagNoise));
            auto result = decode(received, draw.hash, params);
            cc_err.push_back(decoded_error_fraction_cc(draw.messages, result.messages));

            CdmaParams cp;
            cp.m = m;
            cp.spreading_seed = sub_seed(base, kTagChips);
            Rng msg_rng(sub_seed(base, kTagMessages) ^ 0x5bull);
            auto cdma_msgs = sample_messages(m, cp.n_data, msg_rng);
            auto cw = cdma_encode(cdma_msgs, cp);
            // Spread chips carry no indelible substance; channel noise flips them.
            auto corrupted = flip_noise(cw, mu, sub_seed(base, kTagNoise) ^ 0x11ull);
            auto decoded = cdma_decode(corrupted, cp);
            cdma_err.push_back(decoded_error_fraction_cdma(cdma_msgs, decoded));
        }
        MetricRecord cc_row = em.base("cc_error_fraction");
        cc_row.m = m;
        cc_row.mu = mu;
        cc_row.n = params.n_data;
        cc_row.k = params.n_checksum;
        cc_row.codeword_bits = params.codeword_len;
        em.series(cc_row, cc_err);
        MetricRecord cdma_row = cc_row;
        cdma_row.metric = "cdma_error_fraction";
        em.series(cdma_row, cdma_err);
    }
}

void fig10(Emitter& em, const ExperimentConfig& cfg) {
    auto params = CodeParams::closed_code(8, 2);
    int repeats = cfg.repeats.value_or(50);
    std::size_t m_cc = cfg.m.value_or(10);
    const std::size_t m_cdma = 8;  // power of two keeps the chip slots exact
    for (double gf : mu_grid(0.02, 0.5)) {
        std::vector<double> cc_err, cdma_err;
        for (int rep = 0; rep < repeats; ++rep) {
            std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
            auto draw = draw_cc(params, m_cc, base);
            auto received = burst_erase(draw.codeword, gf, std::nullopt, sub_seed(base, kTagBurst));
            DecodeOptions opts;
            opts.bridge_gaps = true;
            auto result = decode(received, draw.hash, params, opts);
            cc_err.push_back(decoded_error_fraction_cc(draw.messages, result.messages));

            CdmaParams cp;
            cp.m = m_cdma;
            cp.spreading_seed = sub_seed(base, kTagChips);
            Rng msg_rng(sub_seed(base, kTagMessages) ^ 0x5bull);
            auto cdma_msgs = sample_messages(m_cdma, cp.n_data, msg_rng);
            auto cw = cdma_encode(cdma_msgs, cp);
            auto corrupted = burst_erase(cw, gf, std::nullopt, sub_seed(base, kTagBurst) ^ 0x11ull);
            auto decoded = cdma_decode(corrupted, cp);
            cdma_err.push_back(decoded_error_fraction_cdma(cdma_msgs, decoded));
        }
        MetricRecord cc_row = em.base("cc_error_fraction");
        cc_row.m = m_cc;
        cc_row.gap_fraction = gf;
        cc_row.n = params.n_data;
        cc_row.k = params.n_checksum;
        cc_row.codeword_bits = params.codeword_len;
        em.series(cc_row, cc_err);
        MetricRecord cdma_row = cc_row;
        cdma_row.metric = "cdma_error_fraction";
        cdma_row.m = m_cdma;
        em.series(cdma_row, cdma_err);
    }
}

void fig11(Emitter& em, const ExperimentConfig& cfg) {
    auto params = CodeParams::closed_code(8, 2);
    int repeats = cfg.repeats.value_or(30);
    for (std::size_t m : kPowersOfTwo) {
        std::vector<double> cc_marks, cdma_marks;
        for (int rep = 0; rep < repeats; ++rep) {
            std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
            auto draw = draw_cc(params, m, base);
            cc_marks.push_back(static_cast<double>(draw.codeword.count()));

            CdmaParams cp;
            cp.m = m;
            cp.spreading_seed = sub_seed(base, kTagChips);
            Rng msg_rng(sub_seed(base, kTagMessages) ^ 0x5bull);
            auto cdma_msgs = sample_messages(m, cp.n_data, msg_rng);
            cdma_marks.push_back(static_cast<double>(cdma_encode(cdma_msgs, cp).count()));
        }
        MetricRecord cc_row = em.base("cc_marks");
        cc_row.m = m;
        cc_row.n = params.n_data;
        cc_row.k = params.n_checksum;
        cc_row.codeword_bits = params.codeword_len;
        em.series(cc_row, cc_marks);
        MetricRecord model = cc_row;
        model.metric = "cc_marks_model";
        em.series(model, {expected_marks(m, n_eff_for(params))});
        MetricRecord cdma_row = cc_row;
        cdma_row.metric = "cdma_marks";
        em.series(cdma_row, cdma_marks);
    }
}

void fig12(Emitter& em, const ExperimentConfig& cfg) {
    auto params = CodeParams::closed_code(8, 2);
    int repeats = cfg.repeats.value_or(30);
    for (double mu : {0.0, 0.15, 0.3}) {
        for (std::size_t m : kPowersOfTwo) {
            std::vector<double> decode_calls;
            for (int rep = 0; rep < repeats; ++rep) {
                std::uint64_t base = cfg.master_seed + static_cast<std::uint64_t>(rep);
                auto draw = draw_cc(params, m, base);
                auto received = add_noise(draw.codeword, mu, sub_seed(base, kTagNoise));
                decode_calls.push_back(static_cast<double>(decode(received, draw.hash, params).hash_calls));
            }
            MetricRecord proto = em.base("decode_hash_calls");
            proto.m = m;
            proto.mu = mu;
            proto.n = params.n_data;
            proto.k = params.n_checksum;
            proto.codeword_bits = params.codeword_len;
            em.series(proto, decode_calls);
            if (mu == 0.0) {
                MetricRecord enc = proto;
                enc.metric = "encode_hash_calls";
                em.series(enc, {static_cast<double>(m * static_cast<std::size_t>(params.hash_calls_per_message()))});
            }
        }
    }
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

std::vector<std::string> experiment_ids() {
    return {"fig2", "fig3", "fig4", "fig5", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12"};
}

std::vector<MetricRecord> run_experiment(const ExperimentConfig& config) {
    if (config.repeats && *config.repeats < 1) throw Error("repeats must be >= 1");

    std::vector<MetricRecord> rows;
    Emitter em{rows, config.id, config.master_seed};
    if (config.id == "fig2") fig2(em, config);
    else if (config.id == "fig3") fig3(em, config);
    else if (config.id == "fig4") fig4(em, config);
    else if (config.id == "fig5") fig5(em, config);
    else if (config.id == "fig7") fig7(em, config);
    else if (config.id == "fig8") fig8(em, config);
    else if (config.id == "fig9") fig9(em, config);
    else if (config.id == "fig10") fig10(em, config);
    else if (config.id == "fig11") fig11(em, config);
    else if (config.id == "fig12") fig12(em, config);
    else throw Error("unknown experiment id: " + config.id);

    // Stable order regardless of how sweep points were produced.
    std::stable_sort(rows.begin(), rows.end(), [](const MetricRecord& a, const MetricRecord& b) {
        auto key = [](const MetricRecord& r) {
            return std::tuple(r.metric, r.m, r.mu, r.gap_fraction, r.n, r.k,
                              r.repeat < 0 ? std::numeric_limits<long>::max() : r.repeat);
        };
        return key(a) < key(b);
    });
    return rows;
}

void write_csv(std::ostream& out, const std::vector<MetricRecord>& rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.experiment << ',' << r.metric << ',' << r.m << ',' << format_value(r.mu) << ','
            << format_value(r.gap_fraction) << ',' << r.n << ',' << r.k << ',' << r.codeword_bits
            << ',' << r.seed << ',';
        if (r.repeat < 0)
            out << "mean";
        else
            out << r.repeat;
        out << ',' << format_value(r.value) << '\n';
    }
    if (!out) throw Error("failed to write CSV");
}

void run_experiment_to_file(const ExperimentConfig& config) {
    auto rows = run_experiment(config);
    if (config.out_path.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(config.out_path);
        if (!out) throw Error("cannot open for writing: " + config.out_path);
        write_csv(out, rows);
    }
}

} // namespace ccode
