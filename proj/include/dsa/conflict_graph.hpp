#pragma once

#include "dsa/model.hpp"

#include <iosfwd>
#include <vector>

namespace dsa {

// Interference conflict graph: one vertex per transmitter, an edge whenever
// two coverage disks overlap. Symmetric, no self-loops, immutable once built.
struct ConflictGraph {
    std::size_t n = 0;
    std::vector<std::vector<TxId>> adjacency;  // adjacency[id-1], sorted ascending

    std::size_t degree(TxId id) const { return adjacency[id - 1].size(); }
};

// O(N^2) pairwise overlap evaluation.
ConflictGraph build_conflict_graph(const Scenario& scenario);

// Sorted neighbor list of `id`. Throws std::out_of_range for unknown ids.
const std::vector<TxId>& neighbors(const ConflictGraph& graph, TxId id);

// Debug dump: one "i,j" line per edge, i < j, lexicographic order.
void write_edge_csv(const ConflictGraph& graph, std::ostream& out);

}  // namespace dsa
