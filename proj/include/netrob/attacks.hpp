#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netrob/graph.hpp"
#include "netrob/random.hpp"

namespace netrob {

enum class Strategy { Random, MDTA, MBTA, EXA, DamageLcc, CriticalCtrl, WeightedProb };
enum class TieBreak { SmallestId, Random };
/// Which degree MDTA ranks by on directed graphs (undirected graphs ignore it).
enum class DegreeKind { Total, Out, In };

DegreeKind parse_degree_kind(std::string_view name);  // total|out|in

Strategy parse_strategy(std::string_view name);  // random|mdta|mbta|exa|damage|critical|wprob
std::string strategy_name(Strategy s);

/// EXA enumerates exactly up to this many targets; beyond it a sample cap is required.
inline constexpr std::size_t kExaMaxExact = 8;

struct AttackPlan {
    Strategy strategy = Strategy::MDTA;
    TargetKind target = TargetKind::Node;
    bool adaptive = true;
    TieBreak tie = TieBreak::SmallestId;
    DegreeKind degree = DegreeKind::Total;
    std::uint64_t seed = 42;
    /// WEIGHTED_PROB feature weights: alpha[0] for degree, alpha[1] for betweenness.
    std::vector<double> alpha{1.0, 0.0};
    /// EXA Monte Carlo permutation count; required when K > kExaMaxExact.
    std::optional<std::size_t> samples;
};

using AttackSequence = std::vector<std::uint32_t>;

/// Throws ParameterError / GraphKindError when the plan cannot run on `graph`.
void validate(const AttackPlan& plan, const Graph& graph);

/// Number of attackable objects: N for node plans, M for edge plans.
std::size_t target_count(const Graph& graph, TargetKind kind);

/// Stateful chooser for one simulation. Static (non-adaptive) MDTA/MBTA
/// scores are taken from the intact graph once, at construction.
class TargetSelector {
public:
    TargetSelector(const Graph& graph, AttackPlan plan);

    /// Next target for the surviving graph. Throws NoTargetError when none is alive.
    std::uint32_t next(const RemovalMask& mask, Rng& rng);

    const AttackPlan& plan() const { return plan_; }

private:
    std::uint32_t pick_max(const std::vector<double>& score, const RemovalMask& mask, Rng& rng) const;
    bool alive(const RemovalMask& mask, std::uint32_t id) const;

    const Graph* graph_;
    AttackPlan plan_;
    std::vector<double> static_scores_;
};

/// One-shot form of TargetSelector::next for adaptive plans.
std::uint32_t next_target(const AttackPlan& plan, const Graph& graph, const RemovalMask& mask, Rng& rng);

/// Alive node whose removal shrinks N_L the most; smallest id on ties.
NodeId damage_greedy_target(const Graph& graph, const RemovalMask& mask);
/// Edge analogue of damage_greedy_target.
EdgeId damage_greedy_edge(const Graph& graph, const RemovalMask& mask);

/// Lowest-id alive arc whose removal raises the MIT driver count, else the
/// lowest-id alive arc. Directed graphs only.
EdgeId critical_ctrl_target(const Graph& graph, const RemovalMask& mask);

/// Per-target attack probabilities p_j over the alive targets (0 for dead ones).
std::vector<double> attack_probabilities(const AttackPlan& plan, const Graph& graph, const RemovalMask& mask);
std::uint32_t weighted_prob_target(const AttackPlan& plan, const Graph& graph, const RemovalMask& mask, Rng& rng);

/// Streams node/edge permutations of size k: all k! in lexicographic order
/// when exact, otherwise `samples` uniform random permutations.
class ExaEnumerator {
public:
    ExaEnumerator(std::size_t k, std::optional<std::size_t> samples, std::uint64_t seed);

    bool exact() const { return exact_; }
    /// Number of permutations the stream yields.
    std::size_t count() const { return count_; }
    /// Writes the next permutation into `out`; false when exhausted.
    bool next(AttackSequence& out);

private:
    std::size_t k_;
    bool exact_;
    std::size_t count_;
    std::size_t emitted_ = 0;
    AttackSequence current_;
    Rng rng_;
};

}  // namespace netrob
