#include "netrob/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace netrob {

namespace {
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
}

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : adj_(left), match_left_(left, kFree), match_right_(right, kFree), dist_(left), iter_(left) {}

void BipartiteMatcher::add_edge(std::uint32_t l, std::uint32_t r) { adj_[l].push_back(r); }

bool BipartiteMatcher::bfs() {
    std::queue<std::uint32_t> q;
    bool found = false;
    for (std::uint32_t l = 0; l < adj_.size(); ++l) {
        if (match_left_[l] == kFree) {
            dist_[l] = 0;
            q.push(l);
        } else {
            dist_[l] = kInf;
        }
    }
    while (!q.empty()) {
        const auto l = q.front();
        q.pop();
        for (auto r : adj_[l]) {
            const auto next = match_right_[r];
            if (next == kFree) {
                found = true;
            } else if (dist_[next] == kInf) {
                dist_[next] = dist_[l] + 1;
                q.push(next);
            }
        }
    }
    return found;
}

// Iterative layered DFS; recursion depth can reach V on long chains.
bool BipartiteMatcher::dfs(std::uint32_t root) {
    struct Frame {
        std::uint32_t l;
    };
    std::vector<Frame> stack{{root}};
    std::vector<std::uint32_t> via;  // right vertex used to descend from each frame
    while (!stack.empty()) {
        const auto l = stack.back().l;
        bool descended = false;
        while (iter_[l] < adj_[l].size()) {
            const auto r = adj_[l][iter_[l]];
            const auto next = match_right_[r];
            if (next == kFree) {
                // Augment along the stack.
                via.push_back(r);
                for (std::size_t k = stack.size(); k-- > 0;) {
                    const auto lk = stack[k].l;
                    const auto rk = via[k];
                    match_left_[lk] = rk;
                    match_right_[rk] = lk;
                }
                return true;
            }
            if (dist_[next] == dist_[l] + 1) {
                via.push_back(r);
                stack.push_back({next});
                descended = true;
                break;
            }
            ++iter_[l];
        }
        if (descended) continue;
        dist_[l] = kInf;
        stack.pop_back();
        if (!via.empty()) {
            via.pop_back();
            ++iter_[stack.back().l];
        }
    }
    return false;
}

std::size_t BipartiteMatcher::solve() {
    std::fill(match_left_.begin(), match_left_.end(), kFree);
    std::fill(match_right_.begin(), match_right_.end(), kFree);
    std::size_t size = 0;
    while (bfs()) {
        std::fill(iter_.begin(), iter_.end(), 0);
        for (std::uint32_t l = 0; l < adj_.size(); ++l) {
            if (match_left_[l] == kFree && dfs(l)) ++size;
        }
    }
    return size;
}

}  // namespace netrob
