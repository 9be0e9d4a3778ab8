#include "dsa/sorting.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsa {

const std::string& strategy_token(SortStrategy strategy) {
    static const std::string tokens[] = {
        "most-overlaps", "bandwidth-coverage", "least-bandwidth", "least-coverage", "random",
    };
    return tokens[static_cast<int>(strategy)];
}

std::optional<SortStrategy> parse_strategy(const std::string& token) {
    for (SortStrategy s : kAllStrategies) {
        if (strategy_token(s) == token) return s;
    }
    return std::nullopt;
}

namespace {

// Sort ids by key (descending or ascending), ascending id on equal keys.
Ordering order_by_key(const Scenario& scenario, bool descending,
                      const std::vector<double>& key_by_id) {
    Ordering order(scenario.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<TxId>(k + 1);
    std::sort(order.begin(), order.end(), [&](TxId a, TxId b) {
        const double ka = key_by_id[a - 1];
        const double kb = key_by_id[b - 1];
        if (ka != kb) return descending ? ka > kb : ka < kb;
        return a < b;
    });
    return order;
}

}  // namespace

Ordering sort_transmitters(const Scenario& scenario, const ConflictGraph& graph,
                           SortStrategy strategy, RandomStream* rng) {
    const std::size_t n = scenario.size();

    if (strategy == SortStrategy::Random) {
        if (rng == nullptr) {
            throw std::invalid_argument("sort_transmitters: Random requires a seeded stream");
        }
        Ordering order(n);
        for (std::size_t k = 0; k < n; ++k) order[k] = static_cast<TxId>(k + 1);
        rng->shuffle(order);
        return order;
    }

    std::vector<double> key(n, 0.0);
    bool descending = true;
    switch (strategy) {
        case SortStrategy::MostOverlaps:
            for (TxId id = 1; id <= n; ++id) key[id - 1] = static_cast<double>(graph.degree(id));
            break;
        case SortStrategy::BandwidthCoverage:
            for (const Transmitter& t : scenario.transmitters) {
                key[t.id - 1] = t.radius * static_cast<double>(t.bandwidth);
            }
            break;
        case SortStrategy::LeastBandwidth:
            descending = false;
            for (const Transmitter& t : scenario.transmitters) {
                key[t.id - 1] = static_cast<double>(t.bandwidth);
            }
            break;
        case SortStrategy::LeastCoverage:
            descending = false;
            for (const Transmitter& t : scenario.transmitters) key[t.id - 1] = t.radius;
            break;
        case SortStrategy::Random:
            break;  // handled above
    }
    return order_by_key(scenario, descending, key);
}

}  // namespace dsa
