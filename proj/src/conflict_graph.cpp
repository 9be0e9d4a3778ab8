#include "dsa/conflict_graph.hpp"

#include "dsa/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace dsa {

ConflictGraph build_conflict_graph(const Scenario& scenario) {
    ConflictGraph graph;
    graph.n = scenario.size();
    graph.adjacency.assign(graph.n, {});
    const auto& txs = scenario.transmitters;
    for (std::size_t i = 0; i < txs.size(); ++i) {
        for (std::size_t j = i + 1; j < txs.size(); ++j) {
            if (overlaps(txs[i], txs[j])) {
                graph.adjacency[txs[i].id - 1].push_back(txs[j].id);
                graph.adjacency[txs[j].id - 1].push_back(txs[i].id);
            }
        }
    }
    for (auto& adj : graph.adjacency) {
        std::sort(adj.begin(), adj.end());
    }
    return graph;
}

const std::vector<TxId>& neighbors(const ConflictGraph& graph, TxId id) {
    if (id < 1 || id > graph.n) {
        throw std::out_of_range("neighbors: unknown transmitter id");
    }
    return graph.adjacency[id - 1];
}

void write_edge_csv(const ConflictGraph& graph, std::ostream& out) {
    for (TxId i = 1; i <= graph.n; ++i) {
        for (TxId j : graph.adjacency[i - 1]) {
            if (i < j) out << i << ',' << j << '\n';
        }
    }
}

}  // namespace dsa
