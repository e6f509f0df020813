#pragma once

#include <cstdint>
#include <vector>

namespace netrob {

/// Maximum-cardinality matching on a bipartite graph by Hopcroft-Karp,
/// O(E sqrt(V)). Left and right vertices are numbered independently from 0.
class BipartiteMatcher {
public:
    static constexpr std::uint32_t kFree = 0xffffffffu;

    BipartiteMatcher(std::size_t left, std::size_t right);

    void add_edge(std::uint32_t l, std::uint32_t r);
    std::size_t left_size() const { return adj_.size(); }
    std::size_t right_size() const { return match_right_.size(); }

    /// Runs the algorithm from scratch and returns |E*|.
    std::size_t solve();

    /// Partner of left vertex l after solve(), or kFree.
    std::uint32_t match_of_left(std::uint32_t l) const { return match_left_[l]; }
    std::uint32_t match_of_right(std::uint32_t r) const { return match_right_[r]; }
    const std::vector<std::uint32_t>& neighbors(std::uint32_t l) const { return adj_[l]; }

private:
    bool bfs();
    bool dfs(std::uint32_t l);

    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint32_t> match_left_;
    std::vector<std::uint32_t> match_right_;
    std::vector<std::uint32_t> dist_;
    std::vector<std::size_t> iter_;
};

}  // namespace netrob
