#pragma once

#include "dsa/allocation.hpp"
#include "dsa/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dsa {

enum class Metric { FI, BU, CA, BC, TF };

inline constexpr std::array<Metric, 5> kAllMetrics = {Metric::FI, Metric::BU, Metric::CA,
                                                      Metric::BC, Metric::TF};

const std::string& metric_token(Metric metric);  // fi, bu, ca, bc, tf
std::optional<Metric> parse_metric(const std::string& token);

// The five performance figures for one (scenario, strategy) evaluation.
struct MetricsReport {
    int fi = 0;             // 1 iff every transmitter fits within F
    int bu = 0;             // highest band index used
    double ca = 0.0;        // summed clipped coverage area of admissible txs
    double bc = 0.0;        // summed R_i * B_i of admissible txs
    int tf = 0;             // allocated count before the first inadmissible one
    std::vector<TxId> admissible;  // sorted ascending

    double value(Metric metric) const;
};

// Ids whose interval ends within {1..F}, sorted ascending.
std::vector<TxId> admissible_set(const Allocation& allocation, int total_bandwidth);

int feasibility_indicator(const Allocation& allocation, int total_bandwidth);
int bandwidth_usage(const Allocation& allocation);  // 0 when empty
double coverage_area(const Scenario& scenario, const std::vector<TxId>& admissible);
double bandwidth_coverage_product(const Scenario& scenario, const std::vector<TxId>& admissible);
int total_feasible(const Allocation& allocation, int total_bandwidth);

// All five metrics over a completed allocation, F = scenario.total_bandwidth.
MetricsReport compute_metrics(const Scenario& scenario, const Allocation& allocation);

// Cross-checks the definitional identities (fi == 1 iff bu <= F iff tf == N;
// the ordering prefix of length tf is admissible and, when tf < N, position
// tf + 1 is not). Throws std::logic_error on violation.
void check_metric_identities(const Scenario& scenario, const Allocation& allocation,
                             const MetricsReport& report);

}  // namespace dsa
