#include "netrob/attacks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>

#include "netrob/apriori.hpp"
#include "netrob/error.hpp"
#include "netrob/functional.hpp"
#include "netrob/matching.hpp"

namespace netrob {

namespace {

bool same_score(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> degree_scores(const Graph& g, const RemovalMask& mask, TargetKind kind,
                                  DegreeKind which = DegreeKind::Total) {
    if (!g.directed()) which = DegreeKind::Total;
    std::vector<double> deg(g.node_count(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!mask.edge_alive(e)) continue;
        if (which != DegreeKind::In) deg[g.edge(e).u] += 1.0;
        if (which != DegreeKind::Out) deg[g.edge(e).v] += 1.0;
    }
    if (kind == TargetKind::Node) return deg;
    std::vector<double> out(g.edge_count(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (mask.edge_alive(e)) out[e] = deg[g.edge(e).u] * deg[g.edge(e).v];
    }
    return out;
}

std::vector<double> betweenness_scores(const Graph& g, const RemovalMask& mask, TargetKind kind) {
    auto b = betweenness(g, mask);
    return kind == TargetKind::Node ? std::move(b.node) : std::move(b.edge);
}

std::vector<double> strategy_scores(const Graph& g, const RemovalMask& mask, const AttackPlan& plan) {
    return plan.strategy == Strategy::MDTA ? degree_scores(g, mask, plan.target, plan.degree)
                                           : betweenness_scores(g, mask, plan.target);
}

std::size_t lcc_without(const Graph& g, RemovalMask mask, Target t) {
    mask.remove(g, t);
    return components(g, mask).largest;
}

}  // namespace

Strategy parse_strategy(std::string_view name) {
    std::string s(name);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "random") return Strategy::Random;
    if (s == "mdta") return Strategy::MDTA;
    if (s == "mbta") return Strategy::MBTA;
    if (s == "exa") return Strategy::EXA;
    if (s == "damage") return Strategy::DamageLcc;
    if (s == "critical") return Strategy::CriticalCtrl;
    if (s == "wprob") return Strategy::WeightedProb;
    throw ParameterError("unknown strategy '" + std::string(name) + "'");
}

DegreeKind parse_degree_kind(std::string_view name) {
    if (name == "total") return DegreeKind::Total;
    if (name == "out") return DegreeKind::Out;
    if (name == "in") return DegreeKind::In;
    throw ParameterError("unknown degree kind '" + std::string(name) + "'");
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Random: return "random";
        case Strategy::MDTA: return "mdta";
        case Strategy::MBTA: return "mbta";
        case Strategy::EXA: return "exa";
        case Strategy::DamageLcc: return "damage";
        case Strategy::CriticalCtrl: return "critical";
        case Strategy::WeightedProb: return "wprob";
    }
    return "?";
}

std::size_t target_count(const Graph& graph, TargetKind kind) {
    return kind == TargetKind::Node ? graph.node_count() : graph.edge_count();
}

void validate(const AttackPlan& plan, const Graph& graph) {
    if (plan.strategy == Strategy::CriticalCtrl) {
        if (plan.target != TargetKind::Edge) throw ParameterError("critical attack removes edges; use --target edge");
        if (!graph.directed()) throw GraphKindError("critical attack needs a directed graph");
    }
    if (plan.strategy == Strategy::EXA) {
        const auto k = target_count(graph, plan.target);
        if (k > kExaMaxExact && !plan.samples)
            throw ParameterError("EXA over " + std::to_string(k) + " targets needs a sample count");
        if (plan.samples && *plan.samples == 0) throw ParameterError("EXA sample count must be positive");
    }
    if (plan.strategy == Strategy::WeightedProb) {
        if (plan.alpha.size() != 2) throw ParameterError("wprob needs two weights (degree, betweenness)");
        double sum = 0.0;
        for (double a : plan.alpha) {
            if (a < 0.0) throw ParameterError("wprob weights must be non-negative");
            sum += a;
        }
        if (std::abs(sum - 1.0) > 1e-9) throw ParameterError("wprob weights must sum to 1");
    }
}

TargetSelector::TargetSelector(const Graph& graph, AttackPlan plan) : graph_(&graph), plan_(std::move(plan)) {
    validate(plan_, graph);
    if (!plan_.adaptive && (plan_.strategy == Strategy::MDTA || plan_.strategy == Strategy::MBTA)) {
        static_scores_ = strategy_scores(graph, RemovalMask(graph), plan_);
    }
}

bool TargetSelector::alive(const RemovalMask& mask, std::uint32_t id) const {
    return plan_.target == TargetKind::Node ? mask.node_alive(id) : mask.edge_alive(id);
}

std::uint32_t TargetSelector::pick_max(const std::vector<double>& score, const RemovalMask& mask, Rng& rng) const {
    std::vector<std::uint32_t> best;
    double top = 0.0;
    for (std::uint32_t id = 0; id < score.size(); ++id) {
        if (!alive(mask, id)) continue;
        if (best.empty() || (score[id] > top && !same_score(score[id], top))) {
            best.assign(1, id);
            top = score[id];
        } else if (same_score(score[id], top)) {
            best.push_back(id);
        }
    }
    if (best.empty()) throw NoTargetError("no alive target left");
    if (plan_.tie == TieBreak::Random && best.size() > 1) return best[uniform_index(rng, best.size())];
    return best.front();
}

std::uint32_t TargetSelector::next(const RemovalMask& mask, Rng& rng) {
    const Graph& g = *graph_;
    check_mask(g, mask);
    const bool node = plan_.target == TargetKind::Node;
    const std::size_t remaining = node ? mask.alive_nodes() : mask.alive_edges();
    if (remaining == 0) throw NoTargetError("no alive target left");

    switch (plan_.strategy) {
        case Strategy::Random: {
            std::size_t pick = uniform_index(rng, remaining);
            for (std::uint32_t id = 0;; ++id) {
                if (alive(mask, id) && pick-- == 0) return id;
            }
        }
        case Strategy::MDTA:
        case Strategy::MBTA:
            if (!plan_.adaptive) return pick_max(static_scores_, mask, rng);
            return pick_max(strategy_scores(g, mask, plan_), mask, rng);
        case Strategy::DamageLcc:
            return node ? damage_greedy_target(g, mask) : damage_greedy_edge(g, mask);
        case Strategy::CriticalCtrl:
            return critical_ctrl_target(g, mask);
        case Strategy::WeightedProb:
            return weighted_prob_target(plan_, g, mask, rng);
        case Strategy::EXA:
            throw ParameterError("EXA has no single next target; enumerate sequences instead");
    }
    throw ParameterError("unknown strategy");
}

std::uint32_t next_target(const AttackPlan& plan, const Graph& graph, const RemovalMask& mask, Rng& rng) {
    TargetSelector sel(graph, plan);
    return sel.next(mask, rng);
}

NodeId damage_greedy_target(const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    if (mask.alive_nodes() == 0) throw NoTargetError("no alive node left");
    const std::size_t before = components(graph, mask).largest;
    NodeId best = 0;
    long long best_damage = -1;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (!mask.node_alive(v)) continue;
        const auto damage = static_cast<long long>(before) -
                            static_cast<long long>(lcc_without(graph, mask, {TargetKind::Node, v}));
        if (damage > best_damage) {
            best_damage = damage;
            best = v;
        }
    }
    return best;
}

EdgeId damage_greedy_edge(const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    if (mask.alive_edges() == 0) throw NoTargetError("no alive edge left");
    const std::size_t before = components(graph, mask).largest;
    EdgeId best = 0;
    long long best_damage = -1;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        if (!mask.edge_alive(e)) continue;
        const auto damage = static_cast<long long>(before) -
                            static_cast<long long>(lcc_without(graph, mask, {TargetKind::Edge, e}));
        if (damage > best_damage) {
            best_damage = damage;
            best = e;
        }
    }
    return best;
}

EdgeId critical_ctrl_target(const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    if (!graph.directed()) throw GraphKindError("critical attack needs a directed graph");
    if (mask.alive_edges() == 0) throw NoTargetError("no alive edge left");

    const std::size_t n = graph.node_count();
    BipartiteMatcher matcher(n, n);
    EdgeId first_alive = static_cast<EdgeId>(graph.edge_count());
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        if (!mask.edge_alive(e)) continue;
        first_alive = std::min(first_alive, e);
        matcher.add_edge(graph.edge(e).u, graph.edge(e).v);
    }
    const std::size_t matched = matcher.solve();
    // With a perfect matching N_D is pinned at 1; losing one matched arc keeps it there.
    if (matched >= mask.alive_nodes()) return first_alive;

    std::vector<std::uint32_t> ml(n), mr(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        ml[i] = matcher.match_of_left(i);
        mr[i] = matcher.match_of_right(i);
    }

    // An arc outside the matching is never critical. A matched arc u->v is
    // critical iff no augmenting path exists once it is dropped; any such
    // path must start at a free left vertex, so one BFS per candidate suffices.
    std::vector<std::uint8_t> seen(n);
    std::deque<std::uint32_t> queue;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        if (!mask.edge_alive(e)) continue;
        const NodeId u = graph.edge(e).u;
        const NodeId v = graph.edge(e).v;
        if (ml[u] != v) continue;
        ml[u] = BipartiteMatcher::kFree;
        mr[v] = BipartiteMatcher::kFree;

        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        for (NodeId l = 0; l < n; ++l) {
            if (mask.node_alive(l) && ml[l] == BipartiteMatcher::kFree) {
                seen[l] = 1;
                queue.push_back(l);
            }
        }
        bool augmenting = false;
        while (!queue.empty() && !augmenting) {
            const auto l = queue.front();
            queue.pop_front();
            for (const auto& nb : graph.out_neighbors(l)) {
                if (!mask.edge_alive(nb.edge) || nb.edge == e) continue;
                const auto partner = mr[nb.node];
                if (partner == BipartiteMatcher::kFree) {
                    augmenting = true;
                    break;
                }
                if (!seen[partner]) {
                    seen[partner] = 1;
                    queue.push_back(partner);
                }
            }
        }
        ml[u] = v;
        mr[v] = u;
        if (!augmenting) return e;
    }
    return first_alive;
}

std::vector<double> attack_probabilities(const AttackPlan& plan, const Graph& graph, const RemovalMask& mask) {
    check_mask(graph, mask);
    const std::size_t k = target_count(graph, plan.target);
    std::vector<double> p(k, 0.0);
    std::size_t alive_count = 0;
    auto is_alive = [&](std::uint32_t id) {
        return plan.target == TargetKind::Node ? mask.node_alive(id) : mask.edge_alive(id);
    };
    for (std::uint32_t id = 0; id < k; ++id) alive_count += is_alive(id);
    if (alive_count == 0) throw NoTargetError("no alive target left");

    const std::vector<double> alpha = plan.alpha.empty() ? std::vector<double>{1.0, 0.0} : plan.alpha;
    for (std::size_t f = 0; f < alpha.size() && f < 2; ++f) {
        if (alpha[f] == 0.0) continue;
        const auto g = f == 0 ? degree_scores(graph, mask, plan.target, plan.degree) : betweenness_scores(graph, mask, plan.target);
        double total = 0.0;
        for (std::uint32_t id = 0; id < k; ++id)
            if (is_alive(id)) total += g[id];
        for (std::uint32_t id = 0; id < k; ++id) {
            if (!is_alive(id)) continue;
            // An all-zero feature carries no preference; spread its weight uniformly.
            p[id] += alpha[f] * (total > 0.0 ? g[id] / total : 1.0 / static_cast<double>(alive_count));
        }
    }
    return p;
}

std::uint32_t weighted_prob_target(const AttackPlan& plan, const Graph& graph, const RemovalMask& mask, Rng& rng) {
    const auto p = attack_probabilities(plan, graph, mask);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    const double x = uniform_real(rng) * total;
    double acc = 0.0;
    std::uint32_t last = 0;
    for (std::uint32_t id = 0; id < p.size(); ++id) {
        if (p[id] <= 0.0) continue;
        acc += p[id];
        last = id;
        if (x < acc) return id;
    }
    return last;
}

ExaEnumerator::ExaEnumerator(std::size_t k, std::optional<std::size_t> samples, std::uint64_t seed)
    : k_(k), exact_(k <= kExaMaxExact), rng_(seed) {
    if (!exact_ && !samples) throw ParameterError("EXA over " + std::to_string(k) + " targets needs a sample count");
    if (exact_) {
        count_ = 1;
        for (std::size_t i = 2; i <= k; ++i) count_ *= i;
    } else {
        count_ = *samples;
    }
    current_.resize(k);
}

bool ExaEnumerator::next(AttackSequence& out) {
    if (emitted_ >= count_) return false;
    if (exact_) {
        if (emitted_ == 0) std::iota(current_.begin(), current_.end(), 0u);
        else std::next_permutation(current_.begin(), current_.end());
    } else {
        std::iota(current_.begin(), current_.end(), 0u);
        shuffle(std::span<std::uint32_t>(current_), rng_);
    }
    ++emitted_;
    out = current_;
    return true;
}

}  // namespace netrob
