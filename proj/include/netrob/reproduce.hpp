#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netrob/attacks.hpp"
#include "netrob/engine.hpp"
#include "netrob/generators.hpp"

namespace netrob {

/// The ten synthetic models in table order.
const std::vector<Model>& table2_models();

/// Network setting used for the synthetic comparison: directed, mean
/// out-degree `out_degree` (M = N * out_degree arcs), SF/OS weight exponent 0.99.
GeneratorConfig table2_network(Model model, std::size_t n, std::uint64_t seed, double out_degree = 10.0);

/// Adaptive out-degree MDTA on nodes.
AttackPlan table2_node_plan();
/// Adaptive MBTA on edges.
AttackPlan table2_edge_plan();

struct Table2Cell {
    double cd = 0.0;
    double td = 0.0;
};

struct Table2Row {
    std::string model;
    std::size_t seeds = 0;
    Table2Cell node_controllability;  // R3 (MIT)
    Table2Cell node_connectivity;     // R1
    Table2Cell node_communication;    // R6
    double node_T = 0.0;
    std::optional<Table2Cell> edge_controllability;  // R3e
    std::optional<Table2Cell> edge_connectivity;     // R1e
    std::optional<Table2Cell> edge_communication;    // R6
    std::optional<double> edge_T;
};

/// Seed-averaged row; seed s of model m uses derive_seed(master, index(m), s).
Table2Row table2_row(Model model, std::size_t n, std::size_t seeds, bool with_edges, std::uint64_t master = 42,
                     unsigned threads = 0);

/// The canonical 4-node nets in table column order.
std::vector<std::pair<std::string, Graph>> canonical_nets(bool directed);

/// EXA, MDTA and MBTA node plans (smallest-id ties).
std::vector<AttackPlan> table34_plans();

/// R1, R15, R3, R7.
std::vector<Measure> table34_measures();

}  // namespace netrob
