#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netrob/attacks.hpp"
#include "netrob/engine.hpp"
#include "netrob/graph.hpp"
#include "netrob/random.hpp"

namespace netrob {

enum class Algorithm { HillClimb, Annealing };
enum class Constraint { Degrees, Average, None };

struct Objective {
    Measure measure = Measure::R1;
    AttackPlan plan;         // MDTA/MBTA with smallest-id ties keeps the objective noise-free
    Scheme scheme = Scheme::CD;
    double p = 0.05;         // threshold parameter for TD
    std::size_t repeats = 5; // runs averaged for RANDOM/WPROB objectives
    EvalOptions eval;
};

struct OptimizeConfig {
    Objective objective;
    Algorithm algorithm = Algorithm::HillClimb;
    Constraint constraint = Constraint::Degrees;
    std::size_t iterations = 1000;
    double sa_temperature = 0.01;  // initial temperature
    double sa_cooling = 0.995;     // geometric factor per iteration
    bool keep_connected = false;
    std::uint64_t seed = 42;
    std::size_t retry_limit = 100;  // proposal attempts before declaring stagnation
};

/// One rewiring move: edges `removed` are replaced by `added`.
struct Rewire {
    std::vector<EdgeId> removed;
    std::vector<Edge> added;
};

struct OptimizeLogEntry {
    std::size_t iteration = 0;
    std::optional<double> candidate;  // absent when no move was evaluated
    bool accepted = false;
    double best = 0.0;
    std::vector<Edge> removed;  // endpoints of the edges the move dropped
    std::vector<Edge> added;
    std::string note;  // "stagnation", "disconnects", ...
};

struct OptimizeResult {
    Graph best;
    double initial = 0.0;
    double best_value = 0.0;
    std::vector<OptimizeLogEntry> log;
    bool stagnated = false;
    std::optional<std::string> error;  // evaluation failure; log is partial
};

/// Two-edge swap (a,b),(c,d) -> (a,d),(c,b) keeping every (in/out) degree.
/// nullopt after `retries` infeasible draws (stagnation).
std::optional<Rewire> degree_preserving_swap(const Graph& graph, Rng& rng, std::size_t retries = 100);

/// Move proposal for the chosen constraint.
std::optional<Rewire> propose(const Graph& graph, Constraint constraint, Rng& rng, std::size_t retries = 100);

Graph apply_rewire(const Graph& graph, const Rewire& move);

double objective_value(const Graph& graph, const Objective& objective);

OptimizeResult optimize(const Graph& graph, const OptimizeConfig& config);

/// Sorted (in, out) degree pairs; equal iff per-node degree multisets agree.
std::vector<std::pair<std::size_t, std::size_t>> degree_signature(const Graph& graph);

}  // namespace netrob
