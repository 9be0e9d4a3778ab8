#pragma once

#include "dsa/conflict_graph.hpp"
#include "dsa/model.hpp"
#include "dsa/rng.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dsa {

// Transmitter-prioritization strategy selecting the allocation order.
enum class SortStrategy {
    MostOverlaps,       // descending conflict-graph degree (Welsh-Powell)
    BandwidthCoverage,  // descending R_i * B_i
    LeastBandwidth,     // ascending B_i
    LeastCoverage,      // ascending R_i
    Random,             // unbiased shuffle from the caller's stream
};

inline constexpr std::array<SortStrategy, 5> kAllStrategies = {
    SortStrategy::MostOverlaps,  SortStrategy::BandwidthCoverage, SortStrategy::LeastBandwidth,
    SortStrategy::LeastCoverage, SortStrategy::Random,
};

// Canonical lowercase CLI tokens: most-overlaps, bandwidth-coverage,
// least-bandwidth, least-coverage, random.
const std::string& strategy_token(SortStrategy strategy);
std::optional<SortStrategy> parse_strategy(const std::string& token);

// A permutation of the scenario's ids, first to be allocated first.
using Ordering = std::vector<TxId>;

// Sort per the strategy's key; ties broken by ascending id. Depends only on
// keys and ids, never on the transmitter list's storage order. `rng` is
// consulted only by Random and must be non-null for it.
Ordering sort_transmitters(const Scenario& scenario, const ConflictGraph& graph,
                           SortStrategy strategy, RandomStream* rng = nullptr);

}  // namespace dsa
