#include "netrob/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "netrob/error.hpp"

namespace netrob {

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<NodeId, Neighbor>>& entries,
               std::vector<std::size_t>& offsets, std::vector<Neighbor>& adj) {
    offsets.assign(n + 1, 0);
    for (const auto& [src, nb] : entries) ++offsets[src + 1];
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    adj.resize(entries.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [src, nb] : entries) adj[cursor[src]++] = nb;
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                  adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }
}

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(std::size_t node_count, std::vector<Edge> edges, bool directed)
    : n_(node_count), directed_(directed), edges_(std::move(edges)) {
    if (edges_.size() > std::numeric_limits<EdgeId>::max())
        throw ParameterError("too many edges");
    std::vector<std::pair<NodeId, Neighbor>> out;
    std::vector<std::pair<NodeId, Neighbor>> in;
    out.reserve(directed_ ? edges_.size() : 2 * edges_.size());
    if (directed_) in.reserve(edges_.size());
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u >= n_ || ed.v >= n_)
            throw ParameterError("edge " + edge_text(ed) + " out of range for N=" + std::to_string(n_));
        if (ed.u == ed.v) throw ParameterError("self-loop " + edge_text(ed));
        out.push_back({ed.u, {ed.v, e}});
        if (directed_) {
            in.push_back({ed.v, {ed.u, e}});
        } else {
            out.push_back({ed.v, {ed.u, e}});
        }
    }
    build_csr(n_, out, out_offsets_, out_adj_);
    if (directed_) build_csr(n_, in, in_offsets_, in_adj_);
    for (NodeId v = 0; v < n_; ++v) {
        auto nb = out_neighbors(v);
        for (std::size_t k = 1; k < nb.size(); ++k) {
            if (nb[k].node == nb[k - 1].node)
                throw ParameterError("duplicate edge " + edge_text({v, nb[k].node}));
        }
    }
}

std::span<const Neighbor> Graph::out_neighbors(NodeId v) const {
    return {out_adj_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Neighbor> Graph::in_neighbors(NodeId v) const {
    if (!directed_) return out_neighbors(v);
    return {in_adj_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::size_t Graph::degree(NodeId v) const {
    return directed_ ? out_degree(v) + in_degree(v) : out_degree(v);
}

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    auto nb = out_neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const Neighbor& a, NodeId x) { return a.node < x; });
    if (it != nb.end() && it->node == v) return it->edge;
    return std::nullopt;
}

RemovalMask::RemovalMask(const Graph& graph)
    : node_dead_(graph.node_count(), 0), edge_dead_(graph.edge_count(), 0) {}

void RemovalMask::remove_node(const Graph& graph, NodeId v) {
    check_mask(graph, *this);
    if (v >= node_count()) throw ContractViolation("node id " + std::to_string(v) + " out of range");
    if (node_dead_[v]) throw RemovedTargetError("node " + std::to_string(v) + " already removed");
    node_dead_[v] = 1;
    ++removed_nodes_;
    auto kill = [&](std::span<const Neighbor> nb) {
        for (const auto& x : nb) {
            if (!edge_dead_[x.edge]) {
                edge_dead_[x.edge] = 1;
                ++dead_edges_;
            }
        }
    };
    kill(graph.out_neighbors(v));
    if (graph.directed()) kill(graph.in_neighbors(v));
}

void RemovalMask::remove_edge(const Graph& graph, EdgeId e) {
    check_mask(graph, *this);
    if (e >= edge_count()) throw ContractViolation("edge id " + std::to_string(e) + " out of range");
    if (edge_dead_[e]) throw RemovedTargetError("edge " + std::to_string(e) + " already removed");
    edge_dead_[e] = 1;
    ++dead_edges_;
    ++removed_edges_;
}

void RemovalMask::remove(const Graph& graph, Target target) {
    if (target.kind == TargetKind::Node) {
        remove_node(graph, target.id);
    } else {
        remove_edge(graph, target.id);
    }
}

RemovalMask apply_attack(const Graph& graph, RemovalMask mask, Target target) {
    mask.remove(graph, target);
    return mask;
}

void check_mask(const Graph& graph, const RemovalMask& mask) {
    if (!mask.matches(graph)) {
        throw ContractViolation("removal mask has dimensions (" + std::to_string(mask.node_count()) +
                                ", " + std::to_string(mask.edge_count()) + ") but graph has (" +
                                std::to_string(graph.node_count()) + ", " +
                                std::to_string(graph.edge_count()) + ")");
    }
}

ComponentDecomposition components(const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    const std::size_t n = graph.node_count();
    ComponentDecomposition out;
    out.component.assign(n, -1);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (!mask.node_alive(s) || out.component[s] >= 0) continue;
        const auto id = static_cast<std::int32_t>(out.sizes.size());
        std::size_t size = 0;
        out.component[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            ++size;
            auto visit = [&](std::span<const Neighbor> nb) {
                for (const auto& x : nb) {
                    if (mask.edge_alive(x.edge) && out.component[x.node] < 0) {
                        out.component[x.node] = id;
                        stack.push_back(x.node);
                    }
                }
            };
            visit(graph.out_neighbors(v));
            if (graph.directed()) visit(graph.in_neighbors(v));
        }
        out.sizes.push_back(size);
        out.largest = std::max(out.largest, size);
    }
    out.count = out.sizes.size();
    return out;
}

ComponentDecomposition components(const Graph& graph) { return components(graph, RemovalMask(graph)); }

namespace {

std::size_t alive_count(const RemovalMask& mask, std::span<const Neighbor> nb) {
    std::size_t k = 0;
    for (const auto& x : nb) k += mask.edge_alive(x.edge) ? 1 : 0;
    return k;
}

void check_alive(const Graph& graph, const RemovalMask& mask, NodeId v) {
    check_mask(graph, mask);
    if (v >= graph.node_count()) throw ContractViolation("node id " + std::to_string(v) + " out of range");
    if (!mask.node_alive(v)) throw RemovedTargetError("node " + std::to_string(v) + " has been removed");
}

}  // namespace

std::size_t out_degree(const Graph& graph, const RemovalMask& mask, NodeId v) {
    check_alive(graph, mask, v);
    return alive_count(mask, graph.out_neighbors(v));
}

std::size_t in_degree(const Graph& graph, const RemovalMask& mask, NodeId v) {
    check_alive(graph, mask, v);
    return alive_count(mask, graph.in_neighbors(v));
}

std::size_t degree(const Graph& graph, const RemovalMask& mask, NodeId v) {
    check_alive(graph, mask, v);
    const std::size_t out = alive_count(mask, graph.out_neighbors(v));
    return graph.directed() ? out + alive_count(mask, graph.in_neighbors(v)) : out;
}

}  // namespace netrob
