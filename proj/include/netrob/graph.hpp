#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace netrob {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
    NodeId node;
    EdgeId edge;
};

/// Immutable simple graph on dense node ids [0, N).
///
/// Undirected graphs keep one neighbor list per node; out_neighbors() and
/// in_neighbors() both return it. Directed graphs keep separate out/in lists.
/// Neighbor lists are sorted by neighbor id. Construction rejects self-loops,
/// duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t node_count, std::vector<Edge> edges, bool directed);

    std::size_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return directed_; }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    std::span<const Neighbor> out_neighbors(NodeId v) const;
    std::span<const Neighbor> in_neighbors(NodeId v) const;

    std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
    std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }
    /// Total degree (in + out for directed graphs).
    std::size_t degree(NodeId v) const;

    /// Edge id of u->v (or {u,v} when undirected), if present.
    std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

private:
    std::size_t n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_;
    std::vector<Neighbor> out_adj_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Neighbor> in_adj_;
};

enum class TargetKind { Node, Edge };

struct Target {
    TargetKind kind;
    std::uint32_t id;
    friend bool operator==(const Target&, const Target&) = default;
};

/// Removal state of one attack simulation over a shared Graph.
///
/// Removing a node marks all its incident edges dead. removed_nodes() is the
/// attack counter i; removed_edges() counts edges attacked directly (i_e),
/// not those that died with an endpoint.
class RemovalMask {
public:
    RemovalMask() = default;
    explicit RemovalMask(const Graph& graph);

    std::size_t node_count() const noexcept { return node_dead_.size(); }
    std::size_t edge_count() const noexcept { return edge_dead_.size(); }
    bool matches(const Graph& graph) const noexcept {
        return node_count() == graph.node_count() && edge_count() == graph.edge_count();
    }

    bool node_alive(NodeId v) const { return !node_dead_[v]; }
    bool edge_alive(EdgeId e) const { return !edge_dead_[e]; }

    std::size_t removed_nodes() const noexcept { return removed_nodes_; }
    std::size_t removed_edges() const noexcept { return removed_edges_; }
    std::size_t alive_nodes() const noexcept { return node_count() - removed_nodes_; }
    std::size_t alive_edges() const noexcept { return edge_count() - dead_edges_; }

    void remove_node(const Graph& graph, NodeId v);
    void remove_edge(const Graph& graph, EdgeId e);
    void remove(const Graph& graph, Target target);

private:
    std::vector<std::uint8_t> node_dead_;
    std::vector<std::uint8_t> edge_dead_;
    std::size_t removed_nodes_ = 0;
    std::size_t removed_edges_ = 0;
    std::size_t dead_edges_ = 0;
};

/// Returns a copy of `mask` with `target` removed.
RemovalMask apply_attack(const Graph& graph, RemovalMask mask, Target target);

/// Weakly connected components of the surviving subgraph.
struct ComponentDecomposition {
    std::vector<std::int32_t> component;  // -1 for removed nodes
    std::vector<std::size_t> sizes;       // S_j, indexed by component id
    std::size_t count = 0;                // Gamma
    std::size_t largest = 0;              // N_L
};

ComponentDecomposition components(const Graph& graph, const RemovalMask& mask);
ComponentDecomposition components(const Graph& graph);

/// Alive incident edges to alive neighbors. Throws RemovedTargetError on a dead node.
std::size_t degree(const Graph& graph, const RemovalMask& mask, NodeId v);
std::size_t out_degree(const Graph& graph, const RemovalMask& mask, NodeId v);
std::size_t in_degree(const Graph& graph, const RemovalMask& mask, NodeId v);

void check_mask(const Graph& graph, const RemovalMask& mask);

}  // namespace netrob
