#pragma once

#include "dsa/metrics.hpp"
#include "dsa/scenario_gen.hpp"
#include "dsa/sorting.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dsa {

// Which generation parameter a sweep varies.
enum class SweepVariable { N, F, RadiusMax, BandwidthMax, None };

const std::string& sweep_variable_token(SweepVariable variable);  // n, f, rmax, bmax, none
std::optional<SweepVariable> parse_sweep_variable(const std::string& token);

// One Monte-Carlo experiment: for each value of `variable`, generate `runs`
// random scenarios and evaluate every strategy on each (paired design).
struct SweepSpec {
    GenParams base;
    SweepVariable variable = SweepVariable::None;
    std::vector<double> values;  // strictly increasing; empty only for None
    std::vector<SortStrategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
    int runs = 50;
    std::uint64_t master_seed = 0;
};

void validate(const SweepSpec& spec);

// Base params with `variable` set to `value`.
GenParams instantiate_params(const SweepSpec& spec, double value);

// Evaluate every strategy on the same scenario: build the conflict graph
// once, then sort / allocate / measure per strategy. Random draws one fresh
// shuffle per occurrence from `sort_rng`. Metric identities are re-checked on
// every report. Returns reports aligned with `strategies`.
std::vector<MetricsReport> run_trial(const Scenario& scenario,
                                     const std::vector<SortStrategy>& strategies,
                                     RandomStream& sort_rng);

struct MetricStats {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, denominator R-1
};

struct SweepResult {
    SweepSpec spec;
    // stats[point][strategy][metric], indices aligned with spec.values,
    // spec.strategies and kAllMetrics.
    std::vector<std::vector<std::array<MetricStats, 5>>> stats;

    std::size_t point_count() const { return stats.size(); }
    double point_value(std::size_t point) const {
        return spec.values.empty() ? 0.0 : spec.values[point];
    }
};

// Raw per-trial reports, kept only on request: raw[point][trial][strategy].
using SweepRawData = std::vector<std::vector<std::vector<MetricsReport>>>;

struct SweepOptions {
    int workers = 0;               // <= 0: hardware concurrency
    SweepRawData* raw = nullptr;   // optional sink for per-trial reports
};

// Deterministic given spec (including master_seed) regardless of worker
// count: trial substreams are derived from (master_seed, point, trial) and
// aggregation runs in trial order.
SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

// Long-format table, one row per (sweep value, strategy, metric):
//   sweep_variable,sweep_value,strategy,metric,mean,stddev,runs
void write_sweep_csv(const SweepResult& result, std::ostream& out);
std::string sweep_csv(const SweepResult& result);

// JSON sidecar: spec echo, master seed, RNG and artifact identifiers.
std::string sweep_metadata_json(const SweepResult& result);

}  // namespace dsa
