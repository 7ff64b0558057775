// Command-line front end: encode/decode/corrupt/sync plus the CDMA baseline,
// closed-form models and the CSV experiment runner.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ccode/analysis.hpp"
#include "ccode/cdma.hpp"
#include "ccode/channel.hpp"
#include "ccode/codec.hpp"
#include "ccode/codeword_io.hpp"
#include "ccode/experiments.hpp"
#include "ccode/hash.hpp"
#include "ccode/rng.hpp"
#include "ccode/sync.hpp"

namespace {

using namespace ccode;

struct CodeFlags {
    int n = 8;
    int k = 2;
    std::uint64_t seed = 1;
    std::size_t codeword_bits = 0;  // 0 = closed-mode default 2^(n+k+1)
    std::string format = "text01";
};

void add_code_flags(CLI::App* cmd, CodeFlags& f) {
    cmd->add_option("--n", f.n, "Message bits N")->capture_default_str();
    cmd->add_option("--k", f.k, "Checksum bits k")->capture_default_str();
    cmd->add_option("--seed", f.seed, "Hash seed")->capture_default_str();
    cmd->add_option("--codeword-bits", f.codeword_bits,
                    "Codeword length L; 0 selects the closed-code default 2^(N+k+1)");
    cmd->add_option("--format", f.format, "Codeword file format")
        ->check(CLI::IsMember({"text01", "binary"}))
        ->capture_default_str();
}

CodeParams make_params(const CodeFlags& f) {
    std::size_t closed_len = (f.n + f.k + 1) < 63 ? (std::size_t{1} << (f.n + f.k + 1)) : 0;
    if (f.codeword_bits == 0 || f.codeword_bits == closed_len)
        return CodeParams::closed_code(f.n, f.k);
    return CodeParams::open_code(f.n, f.k, f.codeword_bits);
}

CodewordFormat parse_format(const std::string& s) {
    return s == "binary" ? CodewordFormat::binary : CodewordFormat::text01;
}

std::vector<Message> gather_messages(const std::string& messages_file, const std::string& inline_list) {
    std::vector<Message> msgs;
    if (!messages_file.empty()) msgs = load_messages_file(messages_file);
    if (!inline_list.empty()) {
        std::stringstream ss(inline_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) msgs.push_back(parse_message(item));
        }
    }
    if (msgs.empty()) throw Error("no messages given; use --messages or --messages-file");
    return msgs;
}

int run(int argc, char** argv) {
    CLI::App app{"Concurrent-coding codec, channel simulator and CDMA baseline"};
    app.require_subcommand(1);

    // encode
    auto* enc = app.add_subcommand("encode", "Hash messages into a codeword");
    CodeFlags enc_flags;
    std::string enc_msgs_file, enc_msgs, enc_out;
    add_code_flags(enc, enc_flags);
    enc->add_option("--messages-file", enc_msgs_file, "Message file, one '0'/'1' string per line, MSB first");
    enc->add_option("--messages", enc_msgs, "Comma-separated messages, MSB first");
    enc->add_option("--out", enc_out, "Codeword output file (default stdout)");

    // decode
    auto* dec = app.add_subcommand("decode", "Decode a codeword through the prefix tree");
    CodeFlags dec_flags;
    std::string dec_in;
    bool dec_bridge = false;
    double dec_fp_target = 0.01;
    add_code_flags(dec, dec_flags);
    dec->add_option("--in", dec_in, "Codeword input file")->required();
    dec->add_flag("--bridge-gaps", dec_bridge, "Keep branches alive across detected gaps");
    dec->add_option("--gap-fp-target", dec_fp_target, "Chance-gap false positive target")
        ->capture_default_str();

    // corrupt
    auto* cor = app.add_subcommand("corrupt", "Apply noise marks and/or a burst erasure");
    CodeFlags cor_flags;
    std::string cor_in, cor_out;
    double cor_noise = 0.0, cor_gf = 0.0;
    std::int64_t cor_gap_start = -1;
    bool cor_flip = false;
    add_code_flags(cor, cor_flags);
    cor->add_option("--in", cor_in, "Codeword input file")->required();
    cor->add_option("--out", cor_out, "Codeword output file (default stdout)");
    cor->add_option("--noise", cor_noise, "Noise fraction mu")->capture_default_str();
    cor->add_option("--gap-fraction", cor_gf, "Burst length as a fraction of L")->capture_default_str();
    cor->add_option("--gap-start", cor_gap_start, "Burst start address; -1 = random placement")
        ->capture_default_str();
    cor->add_flag("--flip", cor_flip, "Flip noise positions instead of OR-ing marks (CDMA channel)");

    // sync
    auto* syn = app.add_subcommand("sync", "Locate codeword starts by principle-mark correlation");
    CodeFlags syn_flags;
    std::string syn_in;
    int syn_q = 5;
    bool syn_reduce = false;
    add_code_flags(syn, syn_flags);
    syn->add_option("--in", syn_in, "Bit stream input file (text01)")->required();
    syn->add_option("--q-threshold", syn_q, "Minimum correlation score")->capture_default_str();
    syn->add_flag("--reduce-in-gaps", syn_reduce, "Lower the threshold where gaps cover pattern marks");

    // cdma-encode
    auto* cenc = app.add_subcommand("cdma-encode", "Hamming + interleave + spread");
    std::string cenc_msgs_file, cenc_msgs, cenc_out, cenc_format = "text01";
    std::uint64_t cenc_seed = 1;
    std::size_t cenc_len = 2048;
    cenc->add_option("--messages-file", cenc_msgs_file, "Message file");
    cenc->add_option("--messages", cenc_msgs, "Comma-separated messages");
    cenc->add_option("--seed", cenc_seed, "Spreading-code seed")->capture_default_str();
    cenc->add_option("--codeword-bits", cenc_len, "Codeword length")->capture_default_str();
    cenc->add_option("--out", cenc_out, "Codeword output file (default stdout)");
    cenc->add_option("--format", cenc_format, "Codeword file format")
        ->check(CLI::IsMember({"text01", "binary"}))
        ->capture_default_str();

    // cdma-decode
    auto* cdec = app.add_subcommand("cdma-decode", "Despread + deinterleave + Hamming decode");
    std::string cdec_in, cdec_format = "text01";
    std::uint64_t cdec_seed = 1;
    std::size_t cdec_m = 0, cdec_len = 2048;
    cdec->add_option("--in", cdec_in, "Codeword input file")->required();
    cdec->add_option("--m", cdec_m, "Message count")->required();
    cdec->add_option("--seed", cdec_seed, "Spreading-code seed")->capture_default_str();
    cdec->add_option("--codeword-bits", cdec_len, "Codeword length")->capture_default_str();
    cdec->add_option("--format", cdec_format, "Codeword file format")
        ->check(CLI::IsMember({"text01", "binary"}))
        ->capture_default_str();

    // model
    auto* mod = app.add_subcommand("model", "Print closed-form model values");
    int mod_eq = 1;
    std::size_t mod_m = 1;
    double mod_mu = 0.0, mod_f = 0.1, mod_neff = 9.0;
    int mod_q = 5, mod_log2l = 11, mod_n = 8, mod_k = 2, mod_fexp = 2;
    std::size_t mod_a = 8;
    mod->add_option("--eq", mod_eq, "Model id: 1 marks, 2 hash calls, 3 signal-to-noise, "
                    "7 false correlations, 8 acceptable noise, 9 CDMA gain, 10 CC gain, "
                    "20 open-vs-closed load (prints both)")
        ->required();
    mod->add_option("--m", mod_m, "Message count")->capture_default_str();
    mod->add_option("--mu", mod_mu, "Noise fraction")->capture_default_str();
    mod->add_option("--neff", mod_neff, "Hash calls per message")->capture_default_str();
    mod->add_option("--q", mod_q, "Correlation threshold")->capture_default_str();
    mod->add_option("--f", mod_f, "Target chance-correlation count")->capture_default_str();
    mod->add_option("--log2L", mod_log2l, "log2 of the codeword length")->capture_default_str();
    mod->add_option("--n", mod_n, "Message bits N")->capture_default_str();
    mod->add_option("--k", mod_k, "Checksum bits k")->capture_default_str();
    mod->add_option("--f-expansion", mod_fexp, "Error-correction expansion factor")->capture_default_str();
    mod->add_option("--a", mod_a, "Total data bits (open-vs-closed)")->capture_default_str();

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run a figure experiment and emit CSV");
    ExperimentConfig cfg;
    int exp_repeats = 0;
    std::size_t exp_m = 0;
    exp->add_option("--experiment", cfg.id, "Experiment id (fig2..fig5, fig7..fig12)")->required();
    exp->add_option("--seed", cfg.master_seed, "Master seed")->capture_default_str();
    exp->add_option("--repeats", exp_repeats, "Repeats per sweep point (0 = experiment default)");
    exp->add_option("--messages", exp_m, "Message count override (experiments with a fixed default)");
    exp->add_option("--out", cfg.out_path, "CSV output path (default stdout)");

    // hash-table dump
    auto* dump = app.add_subcommand("dump-table", "Write the hash table in the binary replay format");
    CodeFlags dump_flags;
    std::string dump_out;
    add_code_flags(dump, dump_flags);
    dump->add_option("--out", dump_out, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
    }

    if (enc->parsed()) {
        auto params = make_params(enc_flags);
        auto msgs = gather_messages(enc_msgs_file, enc_msgs);
        auto hash = make_hash(params, enc_flags.seed);
        auto cw = encode(msgs, *hash, params);
        if (enc_out.empty())
            save_codeword(std::cout, cw, parse_format(enc_flags.format));
        else
            save_codeword_file(enc_out, cw, parse_format(enc_flags.format));
        std::cout << "marks=" << cw.count() << '\n';
    } else if (dec->parsed()) {
        auto params = make_params(dec_flags);
        auto cw = load_codeword_file(dec_in, parse_format(dec_flags.format));
        auto hash = make_hash(params, dec_flags.seed);
        DecodeOptions opts;
        opts.bridge_gaps = dec_bridge;
        opts.gap_false_positive_target = dec_fp_target;
        auto result = decode(cw, *hash, params, opts);
        for (const auto& m : result.messages) std::cout << format_message(m) << '\n';
        std::cout << "hash_calls=" << result.hash_calls << '\n';
        std::cout << "gaps_used=" << result.gaps_used.size() << '\n';
    } else if (cor->parsed()) {
        auto cw = load_codeword_file(cor_in, parse_format(cor_flags.format));
        std::size_t before = cw.count();
        Codeword out = cw;
        if (cor_noise > 0.0)
            out = cor_flip ? flip_noise(out, cor_noise, cor_flags.seed)
                           : add_noise(out, cor_noise, cor_flags.seed);
        std::size_t after_noise = out.count();
        if (cor_gf > 0.0) {
            std::optional<std::size_t> start;
            if (cor_gap_start >= 0) start = static_cast<std::size_t>(cor_gap_start);
            out = burst_erase(out, cor_gf, start, cor_flags.seed + 1);
        }
        if (cor_out.empty())
            save_codeword(std::cout, out, parse_format(cor_flags.format));
        else
            save_codeword_file(cor_out, out, parse_format(cor_flags.format));
        if (cor_noise > 0.0 && !cor_flip) {
            std::size_t drawn = static_cast<std::size_t>(
                std::llround(cor_noise * static_cast<double>(cw.size())));
            std::cout << "noise_overlap_with_signal=" << (before + drawn - after_noise) << '\n';
        }
        std::cout << "marks=" << out.count() << '\n';
    } else if (syn->parsed()) {
        auto params = make_params(syn_flags);
        auto stream = load_codeword_file(syn_in, CodewordFormat::text01);
        auto hash = make_hash(params, syn_flags.seed);
        SyncOptions opts;
        opts.q_threshold = syn_q;
        opts.reduce_threshold_in_gaps = syn_reduce;
        for (const auto& c : synchronize(stream, *hash, params, opts))
            std::cout << c.offset << ' ' << c.score << '\n';
    } else if (cenc->parsed()) {
        auto msgs = gather_messages(cenc_msgs_file, cenc_msgs);
        CdmaParams cp;
        cp.m = msgs.size();
        cp.codeword_len = cenc_len;
        cp.spreading_seed = cenc_seed;
        auto cw = cdma_encode(msgs, cp);
        if (cenc_out.empty())
            save_codeword(std::cout, cw, parse_format(cenc_format));
        else
            save_codeword_file(cenc_out, cw, parse_format(cenc_format));
        std::cout << "marks=" << cw.count() << '\n';
    } else if (cdec->parsed()) {
        CdmaParams cp;
        cp.m = cdec_m;
        cp.codeword_len = cdec_len;
        cp.spreading_seed = cdec_seed;
        auto cw = load_codeword_file(cdec_in, parse_format(cdec_format));
        for (const auto& m : cdma_decode(cw, cp)) std::cout << format_message(m) << '\n';
    } else if (mod->parsed()) {
        std::size_t L = std::size_t{1} << mod_log2l;
        double value = 0.0;
        switch (mod_eq) {
            case 1: value = expected_marks(mod_m, mod_neff); break;
            case 2: value = expected_hash_calls(mod_m, mod_mu, mod_neff); break;
            case 3: {
                auto params = CodeParams::closed_code(mod_n, mod_k);
                value = signal_to_noise(mod_m, mod_mu, params);
                break;
            }
            case 7: value = false_correlation_rate(mod_q, mod_mu, L); break;
            case 8: value = acceptable_noise(mod_q, mod_f, L); break;
            case 9: value = processing_gain_cdma(mod_m, mod_n, mod_k, mod_fexp); break;
            case 10: value = processing_gain_cc(mod_n, mod_k); break;
            case 20: {
                auto load = open_vs_closed_hash_calls(mod_a, mod_n, mod_k);
                std::printf("open=%.10g closed=%.10g\n", load.open, load.closed);
                return 0;
            }
            default: throw Error("unknown --eq id");
        }
        std::printf("%.10g\n", value);
    } else if (exp->parsed()) {
        if (exp_repeats > 0) cfg.repeats = exp_repeats;
        if (exp_m > 0) cfg.m = exp_m;
        run_experiment_to_file(cfg);
    } else if (dump->parsed()) {
        auto params = make_params(dump_flags);
        TableHash table(params, dump_flags.seed);
        std::ofstream out(dump_out, std::ios::binary);
        if (!out) throw Error("cannot open for writing: " + dump_out);
        table.save(out);
        std::cout << "entries=" << table.domain_size() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
