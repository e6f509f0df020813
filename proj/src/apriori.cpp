#include "netrob/apriori.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "netrob/error.hpp"
#include "netrob/linalg.hpp"

namespace netrob {

namespace {

// Single-source shortest paths on the surviving subgraph, forward direction.
struct BfsState {
    std::vector<std::int64_t> dist;
    std::vector<double> sigma;
    std::vector<NodeId> order;  // non-decreasing distance
};

void bfs_from(const Graph& graph, const RemovalMask& mask, NodeId s, BfsState& st) {
    std::fill(st.dist.begin(), st.dist.end(), -1);
    std::fill(st.sigma.begin(), st.sigma.end(), 0.0);
    st.order.clear();
    st.dist[s] = 0;
    st.sigma[s] = 1.0;
    std::size_t head = 0;
    st.order.push_back(s);
    while (head < st.order.size()) {
        const NodeId v = st.order[head++];
        for (const auto& x : graph.out_neighbors(v)) {
            if (!mask.edge_alive(x.edge)) continue;
            if (st.dist[x.node] < 0) {
                st.dist[x.node] = st.dist[v] + 1;
                st.order.push_back(x.node);
            }
            if (st.dist[x.node] == st.dist[v] + 1) st.sigma[x.node] += st.sigma[v];
        }
    }
}

// Matrix-tree theorem: determinant of the Laplacian with row/col 0 deleted,
// by fraction-free Bareiss elimination in 128-bit integers.
std::uint64_t spanning_tree_count_exact(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n <= 1) return 1;
    const std::size_t m = n - 1;
    std::vector<__int128> a(m * m, 0);
    auto at = [&](std::size_t r, std::size_t c) -> __int128& { return a[r * m + c]; };
    for (NodeId v = 1; v < n; ++v) at(v - 1, v - 1) = static_cast<__int128>(graph.degree(v));
    for (const auto& e : graph.edges()) {
        if (e.u > 0 && e.v > 0) {
            at(e.u - 1, e.v - 1) = -1;
            at(e.v - 1, e.u - 1) = -1;
        }
    }
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < m && at(r, k) == 0) ++r;
            if (r == m) return 0;
            for (std::size_t c = 0; c < m; ++c) std::swap(at(k, c), at(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    const __int128 det = sign * at(m - 1, m - 1);
    return static_cast<std::uint64_t>(det < 0 ? -det : det);
}

}  // namespace

Betweenness betweenness(const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    const std::size_t n = graph.node_count();
    Betweenness out{std::vector<double>(n, 0.0), std::vector<double>(graph.edge_count(), 0.0)};
    BfsState st{std::vector<std::int64_t>(n), std::vector<double>(n), {}};
    std::vector<double> delta(n);
    for (NodeId s = 0; s < n; ++s) {
        if (!mask.node_alive(s)) continue;
        bfs_from(graph, mask, s, st);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (std::size_t k = st.order.size(); k-- > 1;) {
            const NodeId w = st.order[k];
            // Predecessors of w are in-neighbors one level closer to s.
            for (const auto& x : graph.in_neighbors(w)) {
                if (!mask.edge_alive(x.edge)) continue;
                const NodeId v = x.node;
                if (st.dist[v] >= 0 && st.dist[v] + 1 == st.dist[w]) {
                    const double c = st.sigma[v] / st.sigma[w] * (1.0 + delta[w]);
                    out.edge[x.edge] += c;
                    delta[v] += c;
                }
            }
            out.node[w] += delta[w];
        }
    }
    if (!graph.directed()) {
        for (auto& b : out.node) b /= 2.0;
        for (auto& b : out.edge) b /= 2.0;
    }
    return out;
}

Betweenness betweenness(const Graph& graph) { return betweenness(graph, RemovalMask(graph)); }

double efficiency(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n < 2) throw ParameterError("efficiency needs N >= 2");
    RemovalMask mask(graph);
    BfsState st{std::vector<std::int64_t>(n), std::vector<double>(n), {}};
    double sum = 0.0;
    for (NodeId s = 0; s < n; ++s) {
        bfs_from(graph, mask, s, st);
        for (NodeId t : st.order) {
            if (t != s) sum += 1.0 / static_cast<double>(st.dist[t]);
        }
    }
    return sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double clustering(const Graph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) return 0.0;
    // Underlying undirected neighbor sets.
    std::vector<std::vector<NodeId>> nbrs(n);
    for (const auto& e : graph.edges()) {
        nbrs[e.u].push_back(e.v);
        nbrs[e.v].push_back(e.u);
    }
    for (auto& l : nbrs) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const auto& l = nbrs[v];
        const std::size_t k = l.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                if (std::binary_search(nbrs[l[a]].begin(), nbrs[l[a]].end(), l[b])) ++links;
            }
        }
        total += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    return total / static_cast<double>(n);
}

SpectralMeasures spectral(const Graph& graph) {
    if (graph.directed()) throw GraphKindError("spectral measures are defined for undirected graphs");
    const std::size_t n = graph.node_count();
    SpectralMeasures out;
    if (n == 0) return out;
    DenseMatrix adj(n, n);
    DenseMatrix lap(n, n);
    for (const auto& e : graph.edges()) {
        adj(e.u, e.v) = adj(e.v, e.u) = 1.0;
        lap(e.u, e.v) = lap(e.v, e.u) = -1.0;
    }
    for (NodeId v = 0; v < n; ++v) lap(v, v) = static_cast<double>(graph.degree(v));

    out.adjacency_eigenvalues = jacobi_eigen(adj).values;
    auto mu = jacobi_eigen(lap).values;
    std::reverse(mu.begin(), mu.end());
    out.laplacian_eigenvalues = mu;

    const auto& lam = out.adjacency_eigenvalues;
    out.spectral_radius = lam.front();
    out.spectral_gap = n > 1 ? lam[0] - lam[1] : 0.0;
    // ln(mean e^lambda), shifted by lambda_1 for overflow safety.
    double acc = 0.0;
    for (double l : lam) acc += std::exp(l - lam.front());
    out.natural_connectivity = lam.front() + std::log(acc / static_cast<double>(n));

    const bool connected = components(graph).count == 1;
    out.algebraic_connectivity = n > 1 ? std::max(0.0, mu[1]) : 0.0;
    if (connected) {
        // Kirchhoff: tau = (1/N) prod_{i>=2} mu_i.
        double log_tau = -std::log(static_cast<double>(n));
        double resistance = 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            log_tau += std::log(mu[i]);
            resistance += 1.0 / mu[i];
        }
        out.spanning_trees_log = log_tau;
        out.effective_resistance = static_cast<double>(n) * resistance;
        if (n <= 16) out.spanning_trees_exact = spanning_tree_count_exact(graph);
    } else {
        if (n <= 16) out.spanning_trees_exact = 0;
    }
    return out;
}

AprioriReport apriori(const Graph& graph) {
    AprioriReport r;
    const std::size_t n = graph.node_count();
    if (n >= 2) r.eff = efficiency(graph);
    r.cc = clustering(graph);
    if (graph.edge_count() > 0) {
        const auto b = betweenness(graph);
        r.nb = std::accumulate(b.node.begin(), b.node.end(), 0.0) / static_cast<double>(n);
        r.eb = std::accumulate(b.edge.begin(), b.edge.end(), 0.0) / static_cast<double>(graph.edge_count());
    }
    if (!graph.directed() && n > 0) {
        const auto s = spectral(graph);
        r.as_sr = s.spectral_radius;
        r.as_sg = s.spectral_gap;
        r.as_nc = s.natural_connectivity;
        r.ls_ac = s.algebraic_connectivity;
        r.ls_ns = s.spanning_trees_log;
        r.ls_ns_exact = s.spanning_trees_exact;
        r.ls_er = s.effective_resistance;
    }
    return r;
}

}  // namespace netrob
