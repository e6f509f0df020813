#include "netrob/reproduce.hpp"

#include <algorithm>

namespace netrob {

const std::vector<Model>& table2_models() {
    static const std::vector<Model> models{Model::ER, Model::SwNw, Model::SwWs, Model::RT, Model::RH,
                                           Model::EH, Model::BA,   Model::SF,   Model::OS, Model::QS};
    return models;
}

GeneratorConfig table2_network(Model model, std::size_t n, std::uint64_t seed, double out_degree) {
    GeneratorConfig c;
    c.model = model;
    c.n = n;
    c.mean_degree = 2.0 * out_degree;
    c.directed = true;
    c.seed = seed;
    // Exponent close to 2; the cited model leaves it open and this reproduces the SF row.
    if (model == Model::SF || model == Model::OS) c.params["alpha"] = 0.99;
    return c;
}

AttackPlan table2_node_plan() {
    AttackPlan p;
    p.strategy = Strategy::MDTA;
    p.target = TargetKind::Node;
    p.degree = DegreeKind::Out;
    return p;
}

AttackPlan table2_edge_plan() {
    AttackPlan p;
    p.strategy = Strategy::MBTA;
    p.target = TargetKind::Edge;
    return p;
}

namespace {

struct SeedResult {
    double v[6] = {};
    double T = 0.0;
    double e[6] = {};
    double eT = 0.0;
};

void fill(double* out, const AttackTrace& trace, const std::vector<Measure>& ms, std::size_t T) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
        out[2 * j] = evaluate(trace, ms[j]);
        out[2 * j + 1] = evaluate(trace, ms[j], {}, T);
    }
}

}  // namespace

Table2Row table2_row(Model model, std::size_t n, std::size_t seeds, bool with_edges, std::uint64_t master,
                     unsigned threads) {
    const auto& models = table2_models();
    const auto index = static_cast<std::uint64_t>(std::find(models.begin(), models.end(), model) - models.begin());
    std::vector<SeedResult> results(seeds);
    parallel_for(seeds, resolve_threads(threads), [&](std::size_t s) {
        const Graph g = generate(table2_network(model, n, derive_seed(master, index, s)));
        const MeasureSet set{true, true, true, true, false};
        const auto node = run_trace(g, table2_node_plan(), set);
        const auto th = detect_threshold(node);
        fill(results[s].v, node, {Measure::R3, Measure::R1, Measure::R6}, th.T);
        results[s].T = static_cast<double>(th.T);
        if (with_edges) {
            const auto edge = run_trace(g, table2_edge_plan(), set);
            const auto eth = detect_threshold(edge);
            fill(results[s].e, edge, {Measure::R3e, Measure::R1e, Measure::R6}, eth.T);
            results[s].eT = static_cast<double>(eth.T);
        }
    });
    Table2Row row;
    row.model = model_name(model);
    row.seeds = seeds;
    SeedResult mean;
    for (const auto& r : results) {
        for (int j = 0; j < 6; ++j) {
            mean.v[j] += r.v[j] / static_cast<double>(seeds);
            mean.e[j] += r.e[j] / static_cast<double>(seeds);
        }
        mean.T += r.T / static_cast<double>(seeds);
        mean.eT += r.eT / static_cast<double>(seeds);
    }
    row.node_controllability = {mean.v[0], mean.v[1]};
    row.node_connectivity = {mean.v[2], mean.v[3]};
    row.node_communication = {mean.v[4], mean.v[5]};
    row.node_T = mean.T;
    if (with_edges) {
        row.edge_controllability = Table2Cell{mean.e[0], mean.e[1]};
        row.edge_connectivity = Table2Cell{mean.e[2], mean.e[3]};
        row.edge_communication = Table2Cell{mean.e[4], mean.e[5]};
        row.edge_T = mean.eT;
    }
    return row;
}

std::vector<std::pair<std::string, Graph>> canonical_nets(bool directed) {
    std::vector<std::pair<std::string, Graph>> nets;
    for (const auto& name : canonical4_names(directed)) nets.emplace_back(name, canonical4(name, directed));
    return nets;
}

std::vector<AttackPlan> table34_plans() {
    std::vector<AttackPlan> plans(3);
    plans[0].strategy = Strategy::EXA;
    plans[1].strategy = Strategy::MDTA;
    plans[2].strategy = Strategy::MBTA;
    return plans;
}

std::vector<Measure> table34_measures() { return {Measure::R1, Measure::R15, Measure::R3, Measure::R7}; }

}  // namespace netrob
