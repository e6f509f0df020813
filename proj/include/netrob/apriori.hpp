#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netrob/graph.hpp"

namespace netrob {

/// Betweenness from Brandes accumulation over the surviving subgraph.
/// Undirected graphs count each unordered pair once; directed graphs follow
/// directed shortest paths. Removed nodes/edges score 0.
struct Betweenness {
    std::vector<double> node;
    std::vector<double> edge;
};

Betweenness betweenness(const Graph& graph, const RemovalMask& mask);
Betweenness betweenness(const Graph& graph);

/// Mean of 1/d_ij over ordered pairs i != j (0 for unreachable pairs). N >= 2.
double efficiency(const Graph& graph);

/// Mean local clustering over the underlying undirected graph; degree < 2 contributes 0.
double clustering(const Graph& graph);

struct SpectralMeasures {
    double spectral_radius = 0.0;       // AS-SR, lambda_1
    double spectral_gap = 0.0;          // AS-SG, lambda_1 - lambda_2
    double natural_connectivity = 0.0;  // AS-NC, ln(mean exp(lambda_i))
    double algebraic_connectivity = 0.0;  // LS-AC, mu_2
    std::optional<double> spanning_trees_log;           // LS-NS as ln(count); NA if count is 0
    std::optional<std::uint64_t> spanning_trees_exact;  // for N <= 16
    std::optional<double> effective_resistance;         // LS-ER; NA if disconnected
    std::vector<double> adjacency_eigenvalues;          // descending
    std::vector<double> laplacian_eigenvalues;          // ascending
};

/// Full spectral sextet. Throws GraphKindError on directed input.
SpectralMeasures spectral(const Graph& graph);

/// The ten one-shot indicators; absent fields are "not applicable".
struct AprioriReport {
    std::optional<double> eff;
    std::optional<double> nb;
    std::optional<double> eb;
    std::optional<double> cc;
    std::optional<double> as_sr;
    std::optional<double> as_sg;
    std::optional<double> as_nc;
    std::optional<double> ls_ac;
    std::optional<double> ls_ns;  // ln(count)
    std::optional<double> ls_er;
    std::optional<std::uint64_t> ls_ns_exact;
};

AprioriReport apriori(const Graph& graph);

}  // namespace netrob
