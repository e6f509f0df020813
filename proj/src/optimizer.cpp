#include "netrob/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "netrob/error.hpp"

namespace netrob {

namespace {

bool pair_free(const Graph& g, NodeId u, NodeId v) { return u != v && !g.has_edge(u, v); }

std::optional<Rewire> relocate_edge(const Graph& g, Rng& rng, std::size_t retries) {
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0 || n < 2) return std::nullopt;
    for (std::size_t t = 0; t < retries; ++t) {
        const auto e = static_cast<EdgeId>(uniform_index(rng, g.edge_count()));
        const auto u = static_cast<NodeId>(uniform_index(rng, n));
        const auto v = static_cast<NodeId>(uniform_index(rng, n));
        if (!pair_free(g, u, v)) continue;
        return Rewire{{e}, {{u, v}}};
    }
    return std::nullopt;
}

std::optional<Rewire> add_or_drop(const Graph& g, Rng& rng, std::size_t retries) {
    const std::size_t n = g.node_count();
    if (g.edge_count() > 0 && (rng() & 1)) {
        return Rewire{{static_cast<EdgeId>(uniform_index(rng, g.edge_count()))}, {}};
    }
    for (std::size_t t = 0; t < retries && n >= 2; ++t) {
        const auto u = static_cast<NodeId>(uniform_index(rng, n));
        const auto v = static_cast<NodeId>(uniform_index(rng, n));
        if (pair_free(g, u, v)) return Rewire{{}, {{u, v}}};
    }
    return std::nullopt;
}

bool better(double candidate, double reference, bool maximize) {
    return maximize ? candidate > reference : candidate < reference;
}

}  // namespace

std::optional<Rewire> degree_preserving_swap(const Graph& g, Rng& rng, std::size_t retries) {
    if (g.edge_count() < 2) return std::nullopt;
    for (std::size_t t = 0; t < retries; ++t) {
        const auto i = static_cast<EdgeId>(uniform_index(rng, g.edge_count()));
        const auto j = static_cast<EdgeId>(uniform_index(rng, g.edge_count()));
        if (i == j) continue;
        const NodeId a = g.edge(i).u, b = g.edge(i).v;
        NodeId c = g.edge(j).u, d = g.edge(j).v;
        // Undirected edges have no orientation; flipping one covers both swap partners.
        if (!g.directed() && (rng() & 1)) std::swap(c, d);
        if (a == c || a == d || b == c || b == d) continue;
        if (g.has_edge(a, d) || g.has_edge(c, b)) continue;
        return Rewire{{i, j}, {{a, d}, {c, b}}};
    }
    return std::nullopt;
}

std::optional<Rewire> propose(const Graph& g, Constraint constraint, Rng& rng, std::size_t retries) {
    switch (constraint) {
        case Constraint::Degrees: return degree_preserving_swap(g, rng, retries);
        case Constraint::Average: return relocate_edge(g, rng, retries);
        case Constraint::None: return add_or_drop(g, rng, retries);
    }
    return std::nullopt;
}

Graph apply_rewire(const Graph& g, const Rewire& move) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() + move.added.size());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (std::find(move.removed.begin(), move.removed.end(), e) == move.removed.end()) edges.push_back(g.edge(e));
    }
    edges.insert(edges.end(), move.added.begin(), move.added.end());
    return Graph(g.node_count(), std::move(edges), g.directed());
}

double objective_value(const Graph& g, const Objective& obj) {
    const bool noisy = obj.plan.strategy == Strategy::Random || obj.plan.strategy == Strategy::WeightedProb ||
                       obj.plan.tie == TieBreak::Random;
    const std::size_t runs = noisy ? std::max<std::size_t>(1, obj.repeats) : 1;
    const MeasureSet set = required_measures({obj.measure}, g.directed(), obj.eval.drivers);
    double sum = 0.0;
    for (std::size_t r = 0; r < runs; ++r) {
        AttackPlan plan = obj.plan;
        // Common random numbers: every candidate sees the same seeds.
        if (noisy) plan.seed = derive_seed(obj.plan.seed, r);
        if (plan.strategy == Strategy::EXA) {
            sum += exa_measure(g, obj.measure, plan.target, plan.samples, plan.seed, obj.eval).mean;
            continue;
        }
        MeasureSet s = set;
        if (obj.scheme == Scheme::TD) s.ncc = true;
        const auto trace = run_trace(g, plan, s);
        if (obj.scheme == Scheme::TD) sum += evaluate(trace, obj.measure, obj.eval, detect_threshold(trace, obj.p).T);
        else sum += evaluate(trace, obj.measure, obj.eval);
    }
    return sum / static_cast<double>(runs);
}

std::vector<std::pair<std::size_t, std::size_t>> degree_signature(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> sig;
    sig.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.directed()) sig.emplace_back(g.in_degree(v), g.out_degree(v));
        else sig.emplace_back(g.degree(v), g.degree(v));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

OptimizeResult optimize(const Graph& graph, const OptimizeConfig& cfg) {
    if (cfg.iterations < 1) throw ParameterError("iteration budget must be at least 1");
    if (cfg.algorithm == Algorithm::Annealing) {
        if (!(cfg.sa_cooling > 0.0 && cfg.sa_cooling < 1.0)) throw ParameterError("cooling rate must lie in (0, 1)");
        if (!(cfg.sa_temperature > 0.0)) throw ParameterError("initial temperature must be positive");
    }
    validate(cfg.objective.plan, graph);
    const bool maximize = higher_is_better(cfg.objective.measure);

    OptimizeResult out;
    Rng rng(cfg.seed);
    Graph current = graph;
    double current_value = objective_value(current, cfg.objective);
    out.initial = current_value;
    out.best = current;
    out.best_value = current_value;
    const std::size_t base_components = components(graph).count;
    double temperature = cfg.sa_temperature;

    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        OptimizeLogEntry entry;
        entry.iteration = it;
        auto move = propose(current, cfg.constraint, rng, cfg.retry_limit);
        if (!move) {
            entry.best = out.best_value;
            entry.note = "stagnation";
            out.log.push_back(entry);
            out.stagnated = true;
            break;
        }
        Graph candidate = apply_rewire(current, *move);
        for (EdgeId e : move->removed) entry.removed.push_back(current.edge(e));
        entry.added = move->added;
        if (cfg.keep_connected && components(candidate).count > std::max<std::size_t>(base_components, 1)) {
            entry.best = out.best_value;
            entry.note = "disconnects";
            out.log.push_back(std::move(entry));
            if (cfg.algorithm == Algorithm::Annealing) temperature *= cfg.sa_cooling;
            continue;
        }
        double value = 0.0;
        try {
            value = objective_value(candidate, cfg.objective);
        } catch (const std::exception& e) {
            out.error = e.what();
            break;
        }
        entry.candidate = value;
        bool accept = better(value, current_value, maximize);
        if (!accept && cfg.algorithm == Algorithm::Annealing) {
            const double worse = std::abs(value - current_value);
            accept = uniform_real(rng) < std::exp(-worse / temperature);
        }
        if (cfg.algorithm == Algorithm::Annealing) temperature *= cfg.sa_cooling;
        if (accept) {
            current = std::move(candidate);
            current_value = value;
            if (better(value, out.best_value, maximize)) {
                out.best = current;
                out.best_value = value;
            }
        }
        entry.accepted = accept;
        entry.best = out.best_value;
        out.log.push_back(std::move(entry));
    }
    return out;
}

}  // namespace netrob
