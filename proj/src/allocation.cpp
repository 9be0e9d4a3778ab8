#include "dsa/allocation.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace dsa {

Allocation allocate(const Scenario& scenario, const ConflictGraph& graph, const Ordering& order) {
    const std::size_t n = scenario.size();
    if (order.size() != n) {
        throw std::invalid_argument("allocate: ordering must be a permutation of the scenario ids");
    }
    const auto by_id = transmitters_by_id(scenario);

    Allocation result;
    result.ordering = order;
    result.assignments.assign(n, BandInterval{});
    std::vector<bool> placed(n, false);

    std::vector<BandInterval> busy;
    for (TxId id : order) {
        if (id < 1 || id > n || placed[id - 1]) {
            throw std::invalid_argument("allocate: ordering is not a permutation");
        }
        const int width = by_id[id - 1]->bandwidth;

        // Intervals of already-placed neighbors, sorted by start; a single
        // forward scan finds the first gap of `width` free bands.
        busy.clear();
        for (TxId nb : graph.adjacency[id - 1]) {
            if (placed[nb - 1]) busy.push_back(result.assignments[nb - 1]);
        }
        std::sort(busy.begin(), busy.end(),
                  [](const BandInterval& a, const BandInterval& b) { return a.start < b.start; });

        int start = 1;
        for (const BandInterval& b : busy) {
            if (start + width - 1 < b.start) break;  // gap before b fits
            start = std::max(start, b.end() + 1);
        }

        result.assignments[id - 1] = BandInterval{start, width};
        placed[id - 1] = true;
    }
    return result;
}

void write_allocation_csv(const Allocation& allocation, std::ostream& out) {
    for (std::size_t k = 0; k < allocation.assignments.size(); ++k) {
        const BandInterval& iv = allocation.assignments[k];
        out << (k + 1) << ',' << iv.start << ',' << iv.end() << '\n';
    }
}

}  // namespace dsa
