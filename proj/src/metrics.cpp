#include "dsa/metrics.hpp"

#include "dsa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsa {

const std::string& metric_token(Metric metric) {
    static const std::string tokens[] = {"fi", "bu", "ca", "bc", "tf"};
    return tokens[static_cast<int>(metric)];
}

std::optional<Metric> parse_metric(const std::string& token) {
    for (Metric m : kAllMetrics) {
        if (metric_token(m) == token) return m;
    }
    return std::nullopt;
}

double MetricsReport::value(Metric metric) const {
    switch (metric) {
        case Metric::FI: return fi;
        case Metric::BU: return bu;
        case Metric::CA: return ca;
        case Metric::BC: return bc;
        case Metric::TF: return tf;
    }
    return 0.0;
}

std::vector<TxId> admissible_set(const Allocation& allocation, int total_bandwidth) {
    std::vector<TxId> admissible;
    for (std::size_t k = 0; k < allocation.assignments.size(); ++k) {
        if (allocation.assignments[k].end() <= total_bandwidth) {
            admissible.push_back(static_cast<TxId>(k + 1));
        }
    }
    return admissible;
}

int feasibility_indicator(const Allocation& allocation, int total_bandwidth) {
    return admissible_set(allocation, total_bandwidth).size() == allocation.assignments.size() ? 1
                                                                                               : 0;
}

int bandwidth_usage(const Allocation& allocation) {
    int bu = 0;
    for (const BandInterval& iv : allocation.assignments) bu = std::max(bu, iv.end());
    return bu;
}

double coverage_area(const Scenario& scenario, const std::vector<TxId>& admissible) {
    const auto by_id = transmitters_by_id(scenario);
    double ca = 0.0;
    for (TxId id : admissible) {
        const Transmitter& t = *by_id[id - 1];
        ca += M_PI * t.radius * t.radius * coverage_correction(t, scenario.region);
    }
    return ca;
}

double bandwidth_coverage_product(const Scenario& scenario, const std::vector<TxId>& admissible) {
    const auto by_id = transmitters_by_id(scenario);
    double bc = 0.0;
    for (TxId id : admissible) {
        const Transmitter& t = *by_id[id - 1];
        bc += t.radius * static_cast<double>(t.bandwidth);
    }
    return bc;
}

int total_feasible(const Allocation& allocation, int total_bandwidth) {
    int position = 0;
    for (TxId id : allocation.ordering) {
        if (allocation.interval(id).end() > total_bandwidth) return position;
        ++position;
    }
    return position;  // == N, feasible
}

MetricsReport compute_metrics(const Scenario& scenario, const Allocation& allocation) {
    MetricsReport report;
    report.admissible = admissible_set(allocation, scenario.total_bandwidth);
    report.fi = feasibility_indicator(allocation, scenario.total_bandwidth);
    report.bu = bandwidth_usage(allocation);
    report.ca = coverage_area(scenario, report.admissible);
    report.bc = bandwidth_coverage_product(scenario, report.admissible);
    report.tf = total_feasible(allocation, scenario.total_bandwidth);
    return report;
}

void check_metric_identities(const Scenario& scenario, const Allocation& allocation,
                             const MetricsReport& report) {
    const int n = static_cast<int>(scenario.size());
    const int f = scenario.total_bandwidth;
    const bool all_admissible = report.admissible.size() == static_cast<std::size_t>(n);
    if ((report.fi == 1) != (report.bu <= f)) {
        throw std::logic_error("metric identity violated: fi == 1 iff bu <= F");
    }
    if ((report.fi == 1) != all_admissible) {
        throw std::logic_error("metric identity violated: fi == 1 iff all ids admissible");
    }
    if ((report.tf == n) != (report.fi == 1)) {
        throw std::logic_error("metric identity violated: tf == N iff fi == 1");
    }
    if (report.tf < 0 || report.tf > n) {
        throw std::logic_error("metric identity violated: tf out of [0, N]");
    }
    for (int pos = 0; pos < report.tf; ++pos) {
        if (allocation.interval(allocation.ordering[pos]).end() > f) {
            throw std::logic_error("metric identity violated: prefix 1..tf must be admissible");
        }
    }
    if (report.tf < n &&
        allocation.interval(allocation.ordering[report.tf]).end() <= f) {
        throw std::logic_error("metric identity violated: position tf+1 must be inadmissible");
    }
}

}  // namespace dsa
