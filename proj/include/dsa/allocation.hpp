#pragma once

#include "dsa/conflict_graph.hpp"
#include "dsa/model.hpp"
#include "dsa/sorting.hpp"

#include <iosfwd>
#include <vector>

namespace dsa {

// Contiguous band interval [start, start + width - 1], 1-based indices.
struct BandInterval {
    int start = 0;
    int width = 0;

    int end() const { return start + width - 1; }
    bool intersects(const BandInterval& other) const {
        return start <= other.end() && other.start <= end();
    }
};

// Result of one DSA run: the ordering used and one interval per id.
struct Allocation {
    Ordering ordering;
    std::vector<BandInterval> assignments;  // assignments[id-1]

    const BandInterval& interval(TxId id) const { return assignments[id - 1]; }
};

// First-fit contiguous assignment. Processes ids in `order`; each transmitter
// takes the smallest start >= 1 whose interval is disjoint from the intervals
// of all previously allocated conflict-graph neighbors. The spectrum is
// unbounded above: inadmissible transmitters are still placed (past F) and
// keep constraining later ones; feasibility is judged by the metrics module.
Allocation allocate(const Scenario& scenario, const ConflictGraph& graph, const Ordering& order);

// Dump "id,start,end" lines ordered by id.
void write_allocation_csv(const Allocation& allocation, std::ostream& out);

}  // namespace dsa
