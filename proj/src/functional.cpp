#include "netrob/functional.hpp"

#include <iostream>
#include <vector>

#include "netrob/error.hpp"
#include "netrob/matching.hpp"

namespace netrob {

std::size_t lcc(const Graph& graph, const RemovalMask& mask) { return components(graph, mask).largest; }

std::size_t maximum_matching_size(const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    if (!graph.directed()) throw GraphKindError("maximum matching for MIT needs a directed graph");
    const std::size_t n = graph.node_count();
    BipartiteMatcher matcher(n, n);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        if (!mask.edge_alive(e)) continue;
        const auto& ed = graph.edge(e);
        matcher.add_edge(ed.u, ed.v);
    }
    return matcher.solve();
}

std::size_t driver_nodes_mit(const Graph& graph, const RemovalMask& mask) {
    const std::size_t matched = maximum_matching_size(graph, mask);
    const std::size_t alive = mask.alive_nodes();
    return alive > matched + 1 ? alive - matched : 1;
}

DenseMatrix surviving_adjacency(const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    std::vector<std::size_t> index(graph.node_count(), 0);
    std::size_t k = 0;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (mask.node_alive(v)) index[v] = k++;
    }
    DenseMatrix a(k, k);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        if (!mask.edge_alive(e)) continue;
        const auto& ed = graph.edge(e);
        a(index[ed.u], index[ed.v]) = 1.0;
        if (!graph.directed()) a(index[ed.v], index[ed.u]) = 1.0;
    }
    return a;
}

std::size_t adjacency_rank(const Graph& graph, const RemovalMask& mask, std::optional<double> tolerance) {
    if (mask.alive_nodes() > kEctWarnSize) {
        std::cerr << "warning: ECT rank on " << mask.alive_nodes() << " nodes is O(N^3)\n";
    }
    return numeric_rank(surviving_adjacency(graph, mask), tolerance);
}

std::size_t driver_nodes_ect(const Graph& graph, const RemovalMask& mask, std::optional<double> tolerance) {
    const std::size_t r = adjacency_rank(graph, mask, tolerance);
    const std::size_t alive = mask.alive_nodes();
    return alive > r + 1 ? alive - r : 1;
}

CnpCounts cnp(const ComponentDecomposition& comps) {
    CnpCounts out;
    for (std::size_t s : comps.sizes) {
        const auto s64 = static_cast<std::uint64_t>(s);
        out.exact += s64 * (s64 - 1) / 2;
        out.squared += s64 * s64;
    }
    return out;
}

CnpCounts cnp(const Graph& graph, const RemovalMask& mask) { return cnp(components(graph, mask)); }

FunctionalSample sample(const Graph& graph, const RemovalMask& mask, const MeasureSet& which) {
    check_mask(graph, mask);
    if (which.empty()) throw ParameterError("empty measure set");
    if (which.mit && !graph.directed()) throw GraphKindError("MIT driver nodes need a directed graph");
    FunctionalSample s;
    s.step = graph.node_count() - mask.alive_nodes();
    s.alive = mask.alive_nodes();
    if (which.lcc || which.ncc || which.cnp) {
        const auto comps = components(graph, mask);
        if (which.lcc) s.lcc = comps.largest;
        if (which.ncc) s.ncc = comps.count;
        if (which.cnp) {
            const auto c = cnp(comps);
            s.cnp_exact = c.exact;
            s.cnp_sq = c.squared;
        }
    }
    if (which.mit) s.drivers_mit = driver_nodes_mit(graph, mask);
    if (which.ect) {
        const std::size_t r = numeric_rank(surviving_adjacency(graph, mask));
        s.rank_a = r;
        s.drivers_ect = s.alive > r + 1 ? s.alive - r : 1;
    }
    return s;
}

}  // namespace netrob
