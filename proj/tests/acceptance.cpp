// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "netrob/apriori.hpp"
#include "netrob/engine.hpp"
#include "netrob/functional.hpp"
#include "netrob/generators.hpp"
#include "netrob/optimizer.hpp"
#include "netrob/reproduce.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace netrob;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : " ") + fmt("%g", x);
    return s;
}

const RankRow* find_row(const RankTable& t, const std::string& strategy, Measure m) {
    for (const auto& r : t.rows)
        if (r.strategy == strategy && r.measure == m) return &r;
    return nullptr;
}

// Reference ranks, columns FUL LOP STR CTS CHA ISO.
const std::map<std::pair<std::string, Measure>, std::vector<double>> kUndirectedRanks{
    {{"exa", Measure::R1}, {1, 2, 4.5, 3, 4.5, 6}},   {{"exa", Measure::R15}, {1, 2, 4.5, 3, 4.5, 6}},
    {{"exa", Measure::R3}, {1, 4, 5, 2, 3, 6}},       {{"exa", Measure::R7}, {1, 2, 4, 3, 5, 6}},
    {{"mdta", Measure::R1}, {1, 2, 5, 3.5, 3.5, 6}},  {{"mdta", Measure::R15}, {1, 2, 5, 3.5, 3.5, 6}},
    {{"mdta", Measure::R3}, {1, 4, 5, 2.5, 2.5, 6}},  {{"mdta", Measure::R7}, {1, 2, 5, 3.5, 3.5, 6}},
    {{"mbta", Measure::R1}, {1, 2.5, 5, 2.5, 4, 6}},  {{"mbta", Measure::R15}, {1, 2.5, 5, 2.5, 4, 6}},
    {{"mbta", Measure::R3}, {1.5, 4, 5, 1.5, 3, 6}},  {{"mbta", Measure::R7}, {1, 2, 5, 3, 4, 6}},
};

// Exhaustive-attack reference ranks for the twelve directed nets, columns
// FUL WKF LOP RIN CTS SSO SSI SSR DCH UCH DIS ISO.
const std::map<Measure, std::vector<double>> kDirectedExaRanks{
    {Measure::R1, {1.5, 1.5, 3.5, 3.5, 5, 8, 8, 8, 8, 8, 11, 12}},
    {Measure::R15, {1.5, 1.5, 3.5, 3.5, 5, 8, 8, 8, 8, 8, 11, 12}},
    {Measure::R3, {1.5, 1.5, 3, 4.5, 4.5, 10.5, 10.5, 8, 6, 9, 7, 12}},
    {Measure::R7, {1.5, 1.5, 3.5, 3.5, 5, 7, 7, 7, 9.5, 9.5, 11, 12}},
};

Outcome undirected_rank_table() {
    const auto t0 = Clock::now();
    const auto table = rank_table(canonical_nets(false), table34_plans(), table34_measures(), {}, 1);
    const double elapsed = seconds_since(t0);
    int bad = 0;
    std::string first;
    for (const auto& [key, want] : kUndirectedRanks) {
        const RankRow* row = find_row(table, key.first, key.second);
        if (!row || row->ranks != want) {
            ++bad;
            if (first.empty())
                first = fmt(" first mismatch %s/%s: got [%s]", key.first.c_str(), measure_name(key.second).c_str(),
                            row ? join(row->ranks).c_str() : "missing");
        }
    }
    return {bad == 0 && elapsed < 1.0,
            fmt("%zu rows, %d mismatched, %.3f s%s", kUndirectedRanks.size(), bad, elapsed, first.c_str())};
}

Outcome exa_value_oracle() {
    const auto t0 = Clock::now();
    // Closed forms, each checked against the rational enumerator below.
    const std::map<std::string, double> closed{{"FUL", 0.625},        {"LOP", 29.0 / 48.0}, {"STR", 0.5625},
                                               {"CTS", 113.0 / 192.0}, {"CHA", 0.5625},      {"ISO", 0.25}};
    double worst = 0.0;
    std::string where;
    for (const auto& [name, g] : canonical_nets(false)) {
        oracle::SmallGraph sg{static_cast<int>(g.node_count()), false, {}};
        for (const auto& e : g.edges()) sg.edges.emplace_back(e.u, e.v);
        const double brute = oracle::exa_r1(sg).convert_to<double>();
        const double got = exa_measure(g, Measure::R1).mean;
        const double err = std::max(std::abs(got - brute), std::abs(closed.at(name) - brute));
        if (err > worst) {
            worst = err;
            where = name;
        }
    }
    const double elapsed = seconds_since(t0);
    return {worst <= 1e-12 && elapsed < 1.0,
            fmt("max |diff| %.2e%s%s, %.3f s", worst, where.empty() ? "" : " at ", where.c_str(), elapsed)};
}

// Relative order inside a subset of columns, as fractional ranks.
std::vector<double> subset_ranks(const std::vector<double>& values, const std::vector<std::size_t>& cols,
                                 bool higher_better) {
    std::vector<double> v;
    for (auto c : cols) v.push_back(values[c]);
    return fractional_ranks(v, higher_better);
}

Outcome directed_exa_subset(std::vector<std::string>& notes) {
    const auto nets = canonical_nets(true);
    AttackPlan exa;
    exa.strategy = Strategy::EXA;
    const std::vector<Measure> measures{Measure::R1, Measure::R15, Measure::R3, Measure::R7};
    const auto table = rank_table(nets, {exa}, measures, {}, 1);
    const std::vector<std::string> subset{"FUL", "LOP", "DCH", "SSO", "SSI", "ISO"};
    std::vector<std::size_t> cols;
    for (const auto& s : subset)
        for (std::size_t i = 0; i < table.nets.size(); ++i)
            if (table.nets[i] == s) cols.push_back(i);
    int bad = 0;
    for (Measure m : measures) {
        const RankRow* row = find_row(table, "exa", m);
        const auto& ref = kDirectedExaRanks.at(m);
        // Lower reference rank means more robust, so rank it as lower-is-better.
        const auto want = subset_ranks(ref, cols, false);
        const auto got = subset_ranks(row->values, cols, higher_is_better(m));
        if (got != want) {
            ++bad;
            notes.push_back(fmt("subset %s: got [%s] want [%s]", measure_name(m).c_str(), join(got).c_str(),
                                join(want).c_str()));
        }
        // Full-table differences are informative only; several directed nets
        // are reconstructions from figure descriptions.
        if (row->ranks != ref)
            notes.push_back(fmt("full %s: got [%s] ref [%s]", measure_name(m).c_str(), join(row->ranks).c_str(),
                                join(ref).c_str()));
    }
    return {bad == 0, fmt("%d of %zu measures out of order on {FUL LOP DCH SSO SSI ISO}", bad, measures.size())};
}

Outcome synthetic_connectivity() {
    struct Ref {
        Model model;
        double r1;
        double T;
    };
    const std::vector<Ref> refs{{Model::ER, 0.476, 891}, {Model::BA, 0.418, 782}, {Model::SF, 0.205, 545}};
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& r : refs) {
        const auto row = table2_row(r.model, 1000, 5, false);
        const double r1 = row.node_connectivity.cd;
        const bool r1_ok = std::abs(r1 - r.r1) <= 0.03;
        const bool t_ok = std::abs(row.node_T - r.T) <= 0.05 * r.T;
        ok = ok && r1_ok && t_ok;
        detail += fmt("%s R1 %.3f (ref %.3f) T %.0f (ref %.0f); ", model_name(r.model).c_str(), r1, r.r1, row.node_T,
                      r.T);
    }
    const double elapsed = seconds_since(t0);
    return {ok && elapsed <= 1800.0, detail + fmt("%.1f s", elapsed)};
}

bool no_edges_at_threshold(const Graph& g) {
    const auto trace = run_trace(g, AttackPlan{}, MeasureSet::connectivity());
    const auto th = detect_threshold(trace);
    RemovalMask mask(g);
    for (std::size_t i = 0; i < th.T; ++i) mask.remove_node(g, trace.sequence[i]);
    return mask.alive_edges() == 0;
}

Outcome threshold_semantics() {
    int checked = 0, bad = 0;
    for (const auto& [name, g] : canonical_nets(false)) {
        ++checked;
        bad += !no_edges_at_threshold(g);
    }
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        GeneratorConfig c;
        c.model = Model::ER;
        c.n = 10 + rng() % 191;
        c.mean_degree = 1.0 + static_cast<double>(rng() % 80) / 10.0;
        c.seed = rng();
        ++checked;
        bad += !no_edges_at_threshold(generate(c));
    }
    return {bad == 0, fmt("%d graphs, %d with edges left at T", checked, bad)};
}

Outcome controllability_oracle() {
    std::mt19937_64 rng(77);
    int mit_bad = 0, ect_bad = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto og = oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, true);
        const Graph g = to_graph(og);
        const int want = std::max(1, n - oracle::max_matching_bruteforce(og));
        mit_bad += static_cast<int>(driver_nodes_mit(g, RemovalMask(g))) != want;
    }
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const auto og = oracle::random_graph(rng, n, 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0, i % 2 == 0);
        const Graph g = to_graph(og);
        const int want = std::max(1, n - oracle::adjacency_rank(og));
        ect_bad += static_cast<int>(driver_nodes_ect(g, RemovalMask(g))) != want;
    }
    return {mit_bad == 0 && ect_bad == 0,
            fmt("matching-based: %d/200 wrong, rank-based: %d/200 wrong", mit_bad, ect_bad)};
}

Outcome spectral_oracle() {
    const auto s = spectral(k4());
    const double nc = std::log((std::exp(3.0) + 3.0 * std::exp(-1.0)) / 4.0);
    const std::vector<double> got{s.spectral_radius, s.spectral_gap, s.natural_connectivity, s.algebraic_connectivity,
                                  std::exp(s.spanning_trees_log.value_or(-1e300)), s.effective_resistance.value_or(-1)};
    const std::vector<double> want{3, 4, nc, 4, 16, 3};
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));

    std::mt19937_64 rng(91);
    int tested = 0, bad = 0;
    while (tested < 100) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto og = oracle::random_graph(rng, n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0, false);
        const Graph g = to_graph(og);
        if (components(g).count != 1) continue;
        ++tested;
        const auto sp = spectral(g);
        bad += !sp.spanning_trees_exact || oracle::Rational(*sp.spanning_trees_exact) != oracle::spanning_trees(og);
    }
    return {worst <= 1e-8 && bad == 0,
            fmt("K4 sextet max |diff| %.2e; spanning trees %d/%d wrong", worst, bad, tested)};
}

Outcome algebraic_identities() {
    std::mt19937_64 rng(5);
    const std::vector<Measure> all{Measure::R1,  Measure::R2,  Measure::R3,  Measure::R6,  Measure::R7,
                                   Measure::R8,  Measure::R9,  Measure::R10, Measure::R15, Measure::R15n};
    double sum_err = 0.0, td_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const bool directed = rng() % 2 == 0;
        const int n = 2 + static_cast<int>(rng() % 30);
        const Graph g = to_graph(oracle::random_graph(rng, n, 0.05 + 0.3 * static_cast<double>(rng() % 100) / 100.0,
                                                      directed));
        AttackPlan plan;
        plan.strategy = std::vector{Strategy::Random, Strategy::MDTA, Strategy::MBTA}[rng() % 3];
        plan.seed = rng();
        if (g.edge_count() > 0 && rng() % 4 == 0) plan.target = TargetKind::Edge;
        const auto t = run_trace(g, plan, MeasureSet::all(directed));
        sum_err = std::max(sum_err, std::abs(evaluate(t, Measure::R3) + evaluate(t, Measure::R9) - 1.0));
        for (Measure m : all) td_err = std::max(td_err, std::abs(evaluate(t, m, {}, t.eval_end()) - evaluate(t, m)));
    }
    return {sum_err <= 1e-12 && td_err <= 1e-12,
            fmt("1000 traces: max |R9+R3-1| %.2e, max |TD(K)-CD| %.2e", sum_err, td_err)};
}

Outcome optimizer_regression() {
    // Floor pinned from the first implementation's runs (mean gain 0.074, minimum 0.063).
    constexpr double kFloor = 0.06;
    const auto t0 = Clock::now();
    double gain = 0.0;
    bool degrees = true;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = generate(GeneratorConfig{Model::ER, 100, 4, false, {}, 1000 + s});
        OptimizeConfig c;
        c.iterations = 2000;
        c.seed = 2000 + s;
        const auto r = optimize(g, c);
        degrees = degrees && degree_signature(r.best) == degree_signature(g);
        gain += r.best_value - r.initial;
    }
    gain /= 10.0;
    const double elapsed = seconds_since(t0);
    return {degrees && gain > kFloor && elapsed < 120.0,
            fmt("mean R1 gain %.4f (floor %.2f), degrees %s, %.1f s", gain, kFloor, degrees ? "kept" : "CHANGED",
                elapsed)};
}

}  // namespace

int main() {
    std::vector<std::string> notes;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
        {"undirected 4-node rank table", undirected_rank_table},
        {"exhaustive R1 values", exa_value_oracle},
        {"directed 4-node exhaustive rank order", [&] { return directed_exa_subset(notes); }},
        {"synthetic nets under degree attack (N=1000, 5 seeds)", synthetic_connectivity},
        {"threshold leaves only isolated nodes", threshold_semantics},
        {"driver node oracles", controllability_oracle},
        {"spectral oracles", spectral_oracle},
        {"R9+R3 and TD(K)=CD identities", algebraic_identities},
        {"rewiring optimizer regression", optimizer_regression},
    };
    int failed = 0;
    for (const auto& [name, fn] : checks) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    for (const auto& n : notes) std::printf("note  %s\n", n.c_str());
    std::printf("%d of %zu criteria failed\n", failed, checks.size());
    return failed == 0 ? 0 : 1;
}
