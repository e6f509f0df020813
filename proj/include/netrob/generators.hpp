#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "netrob/graph.hpp"

namespace netrob {

enum class Model { ER, SwNw, SwWs, RT, RH, EH, BA, SF, OS, QS };

Model parse_model(std::string_view name);  // case-insensitive, e.g. "sw-ws"
std::string model_name(Model model);

/// Seeded synthetic network description.
///
/// `mean_degree` is the mean total degree; models that can target an exact
/// edge count aim for M = floor(N * mean_degree / 2) for both directed and
/// undirected output. Model-specific knobs go in `params`:
///   SW-WS: p (rewiring probability, 0.1)
///   SW-NW: ring_k (lattice degree, largest even <= k-2)
///   BA:    m (links per new node, round(k/2))
///   SF/OS: alpha (weight exponent, 0.5), OS also swaps (assortative attempts, 1000*N)
///   QS:    q (snapback probability; default places exactly the missing arcs)
struct GeneratorConfig {
    Model model = Model::ER;
    std::size_t n = 0;
    double mean_degree = 0.0;
    bool directed = false;
    std::map<std::string, double> params;
    std::uint64_t seed = 42;
};

/// Throws ParameterError for infeasible combinations. Deterministic in (config).
Graph generate(const GeneratorConfig& config);

/// Seed used for the SSR orientation when none is given.
inline constexpr std::uint64_t kDefaultCanonicalSeed = 4;

/// The 4-node example networks. Undirected: FUL LOP STR CTS CHA ISO.
/// Directed: FUL WKF LOP RIN CTS SSO SSI SSR DCH UCH DIS ISO.
Graph canonical4(std::string_view name, bool directed, std::uint64_t seed = kDefaultCanonicalSeed);

/// Names in table column order.
const std::vector<std::string>& canonical4_names(bool directed);

}  // namespace netrob
