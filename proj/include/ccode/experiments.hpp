#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccode {

// One CSV row. The parameter set is the union over all experiments; fields a
// given experiment does not sweep echo its fixed configuration.
struct MetricRecord {
    std::string experiment;
    std::string metric;
    std::size_t m = 0;
    double mu = 0.0;
    double gap_fraction = 0.0;
    int n = 0;
    int k = 0;
    std::size_t codeword_bits = 0;
    std::uint64_t seed = 0;
    long repeat = 0;  // -1 marks the mean row of a sweep point
    double value = 0.0;
};

struct ExperimentConfig {
    std::string id;  // fig2..fig5, fig7..fig12
    std::uint64_t master_seed = 1;
    std::optional<int> repeats;        // default depends on the experiment
    std::optional<std::size_t> m;      // message count override
    std::string out_path;              // empty = stdout
};

inline constexpr const char* kCsvHeader =
    "experiment,metric,m,mu,gap_fraction,n,k,codeword_bits,seed,repeat,value";

// Runs one experiment and appends its rows; per-repeat seeds are
// master_seed + repeat index. Identical configs produce identical rows.
std::vector<MetricRecord> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<MetricRecord>& rows);
void run_experiment_to_file(const ExperimentConfig& config);

std::vector<std::string> experiment_ids();

} // namespace ccode
