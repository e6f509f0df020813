#pragma once

#include "netrob/graph.hpp"
#include "oracles.hpp"

inline netrob::Graph to_graph(const oracle::SmallGraph& g) {
    std::vector<netrob::Edge> edges;
    for (auto [u, v] : g.edges) edges.push_back({static_cast<netrob::NodeId>(u), static_cast<netrob::NodeId>(v)});
    return netrob::Graph(static_cast<std::size_t>(g.n), std::move(edges), g.directed);
}

inline netrob::Graph make(std::size_t n, std::vector<netrob::Edge> edges, bool directed = false) {
    return netrob::Graph(n, std::move(edges), directed);
}

inline netrob::Graph path4() { return make(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline netrob::Graph star4() { return make(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline netrob::Graph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline netrob::Graph c4() { return make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
