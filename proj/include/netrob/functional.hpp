#pragma once

#include <cstdint>
#include <optional>

#include "netrob/graph.hpp"
#include "netrob/linalg.hpp"

namespace netrob {

/// Which per-step functionality values to compute. ECT is O(N^3) and opt-in.
struct MeasureSet {
    bool lcc = true;
    bool ncc = true;
    bool cnp = true;
    bool mit = false;
    bool ect = false;

    bool empty() const { return !(lcc || ncc || cnp || mit || ect); }
    static MeasureSet connectivity() { return {true, true, true, false, false}; }
    static MeasureSet all(bool directed) { return {true, true, true, directed, true}; }
};

struct FunctionalSample {
    std::size_t step = 0;   // i
    std::size_t alive = 0;  // surviving node count N - i
    std::optional<std::size_t> lcc;
    std::optional<std::size_t> ncc;
    std::optional<std::size_t> drivers_mit;
    std::optional<std::size_t> drivers_ect;
    std::optional<std::size_t> rank_a;
    std::optional<std::uint64_t> cnp_exact;  // sum_j C(S_j, 2)
    std::optional<std::uint64_t> cnp_sq;     // sum_j S_j^2
};

struct CnpCounts {
    std::uint64_t exact = 0;
    std::uint64_t squared = 0;
};

/// N_L of the surviving subgraph (0 when nothing survives).
std::size_t lcc(const Graph& graph, const RemovalMask& mask);

/// Maximum matching size |E*| on the out/in bipartite split of the surviving arcs.
std::size_t maximum_matching_size(const Graph& graph, const RemovalMask& mask);

/// max(1, N' - |E*|) with N' the surviving node count. Directed graphs only.
std::size_t driver_nodes_mit(const Graph& graph, const RemovalMask& mask);

/// Surviving adjacency matrix A' (rows/cols in increasing alive-id order).
DenseMatrix surviving_adjacency(const Graph& graph, const RemovalMask& mask);

std::size_t adjacency_rank(const Graph& graph, const RemovalMask& mask,
                           std::optional<double> tolerance = std::nullopt);

/// max(1, N' - rank(A')). Any graph kind.
std::size_t driver_nodes_ect(const Graph& graph, const RemovalMask& mask,
                             std::optional<double> tolerance = std::nullopt);

CnpCounts cnp(const Graph& graph, const RemovalMask& mask);
CnpCounts cnp(const ComponentDecomposition& comps);

/// Computes only the requested fields. Throws GraphKindError when MIT is
/// requested on an undirected graph and ParameterError on an empty set.
FunctionalSample sample(const Graph& graph, const RemovalMask& mask, const MeasureSet& which);

/// Surviving node count above which ECT logs a cost warning.
inline constexpr std::size_t kEctWarnSize = 512;

}  // namespace netrob
