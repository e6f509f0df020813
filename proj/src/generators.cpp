#include "netrob/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "netrob/error.hpp"
#include "netrob/random.hpp"

namespace netrob {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

// Edge accumulator that enforces simplicity.
class EdgeBuilder {
public:
    EdgeBuilder(std::size_t n, bool directed) : n_(n), directed_(directed) {}

    bool contains(NodeId u, NodeId v) const { return set_.count(key(u, v)) > 0; }

    bool add(NodeId u, NodeId v) {
        if (u == v || !set_.insert(key(u, v)).second) return false;
        edges_.push_back({u, v});
        return true;
    }

    void remove_at(std::size_t idx) {
        set_.erase(key(edges_[idx].u, edges_[idx].v));
        edges_[idx] = edges_.back();
        edges_.pop_back();
    }

    void replace(std::size_t idx, Edge e) {
        set_.erase(key(edges_[idx].u, edges_[idx].v));
        set_.insert(key(e.u, e.v));
        edges_[idx] = e;
    }

    std::size_t size() const { return edges_.size(); }
    std::vector<Edge>& edges() { return edges_; }
    std::size_t n() const { return n_; }

private:
    std::uint64_t key(NodeId u, NodeId v) const {
        if (!directed_ && u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    std::size_t n_;
    bool directed_;
    std::unordered_set<std::uint64_t> set_;
    std::vector<Edge> edges_;
};

double param(const GeneratorConfig& c, const std::string& key, double fallback) {
    auto it = c.params.find(key);
    return it == c.params.end() ? fallback : it->second;
}

std::size_t target_edges(const GeneratorConfig& c) {
    return static_cast<std::size_t>(std::floor(static_cast<double>(c.n) * c.mean_degree / 2.0));
}

std::size_t even_degree(const GeneratorConfig& c, const char* model) {
    const double k = c.mean_degree;
    if (k != std::floor(k) || static_cast<long long>(k) % 2 != 0)
        throw ParameterError(std::string(model) + " needs an even integer mean degree");
    return static_cast<std::size_t>(k);
}

NodeId random_node(Rng& rng, std::size_t n) { return static_cast<NodeId>(uniform_index(rng, n)); }

// Uniform random edges until `target` are present.
void fill_random(EdgeBuilder& b, std::size_t target, Rng& rng) {
    while (b.size() < target) b.add(random_node(rng, b.n()), random_node(rng, b.n()));
}

std::vector<Edge> orient(std::vector<Edge> edges, bool directed, Rng& rng) {
    if (!directed) return edges;
    for (auto& e : edges) {
        if (rng() & 1) std::swap(e.u, e.v);
    }
    return edges;
}

Graph make_er(const GeneratorConfig& c, Rng& rng) {
    const std::size_t n = c.n;
    const std::size_t m = target_edges(c);
    const std::size_t possible = c.directed ? n * (n - 1) : n * (n - 1) / 2;
    if (m > possible) throw ParameterError("ER: requested M exceeds the number of node pairs");
    EdgeBuilder b(n, c.directed);
    if (2 * m > possible) {
        // Dense: choose M pairs from an explicit list.
        std::vector<Edge> all;
        all.reserve(possible);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = c.directed ? 0 : u + 1; v < n; ++v)
                if (u != v) all.push_back({u, v});
        for (std::size_t i = 0; i < m; ++i) {
            const auto j = i + uniform_index(rng, all.size() - i);
            std::swap(all[i], all[j]);
        }
        all.resize(m);
        return Graph(n, std::move(all), c.directed);
    }
    fill_random(b, m, rng);
    return Graph(n, std::move(b.edges()), c.directed);
}

void ring_lattice(EdgeBuilder& b, std::size_t ring_k) {
    const std::size_t n = b.n();
    for (std::size_t j = 1; j <= ring_k / 2; ++j)
        for (NodeId i = 0; i < n; ++i) b.add(i, static_cast<NodeId>((i + j) % n));
}

Graph make_sw_ws(const GeneratorConfig& c, Rng& rng) {
    const std::size_t k = even_degree(c, "SW-WS");
    if (k >= c.n) throw ParameterError("SW-WS: mean degree must be below N");
    const double p = param(c, "p", 0.1);
    if (p < 0.0 || p > 1.0) throw ParameterError("SW-WS: p must lie in [0, 1]");
    EdgeBuilder b(c.n, false);
    ring_lattice(b, k);
    const std::size_t lattice = b.size();
    for (std::size_t idx = 0; idx < lattice; ++idx) {
        if (!bernoulli(rng, p)) continue;
        const NodeId u = b.edges()[idx].u;
        for (int attempt = 0; attempt < 64; ++attempt) {
            const NodeId w = random_node(rng, c.n);
            if (w == u || b.contains(u, w)) continue;
            b.replace(idx, {u, w});
            break;
        }
    }
    return Graph(c.n, orient(std::move(b.edges()), c.directed, rng), c.directed);
}

Graph make_sw_nw(const GeneratorConfig& c, Rng& rng) {
    const std::size_t m = target_edges(c);
    const auto k = static_cast<long long>(std::floor(c.mean_degree));
    long long ring_default = std::max(2LL, k - 2);
    if (ring_default % 2) --ring_default;
    const auto ring_k = static_cast<std::size_t>(param(c, "ring_k", static_cast<double>(ring_default)));
    if (ring_k % 2 || ring_k == 0 || ring_k >= c.n) throw ParameterError("SW-NW: ring_k must be even, >= 2 and < N");
    if (c.n * ring_k / 2 > m) throw ParameterError("SW-NW: ring lattice already exceeds the target edge count");
    if (m > c.n * (c.n - 1) / 2) throw ParameterError("SW-NW: requested M exceeds the number of node pairs");
    EdgeBuilder b(c.n, false);
    ring_lattice(b, ring_k);
    fill_random(b, m, rng);
    return Graph(c.n, orient(std::move(b.edges()), c.directed, rng), c.directed);
}

// Adds the missing edges of the closed walk over `cycle`, one at a time, stopping at `target`.
void close_cycle(EdgeBuilder& b, const std::vector<NodeId>& cycle, std::size_t target) {
    for (std::size_t i = 0; i < cycle.size() && b.size() < target; ++i)
        b.add(cycle[i], cycle[(i + 1) % cycle.size()]);
}

// Random motif network: a connected backbone of motifs grown by attachment,
// then random motifs over existing nodes until the target is reached.
Graph make_motif(const GeneratorConfig& c, Rng& rng, std::size_t motif) {
    const std::size_t n = c.n;
    const std::size_t m = target_edges(c);
    const char* name = motif == 3 ? "RT" : "RH";
    if (n < motif) throw ParameterError(std::string(name) + ": N must be at least " + std::to_string(motif));
    if (m > n * (n - 1) / 2) throw ParameterError(std::string(name) + ": requested M exceeds the number of node pairs");
    EdgeBuilder b(n, false);
    std::vector<NodeId> first(motif);
    std::iota(first.begin(), first.end(), 0);
    close_cycle(b, first, std::numeric_limits<std::size_t>::max());
    NodeId next = static_cast<NodeId>(motif);
    const std::size_t batch = motif - 2;
    while (next < n) {
        const Edge anchor = b.edges()[uniform_index(rng, b.size())];
        const std::size_t take = std::min<std::size_t>(batch, n - next);
        std::vector<NodeId> path{anchor.u};
        for (std::size_t t = 0; t < take; ++t) path.push_back(next++);
        path.push_back(anchor.v);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) b.add(path[i], path[i + 1]);
    }
    if (b.size() > m) {
        throw ParameterError(std::string(name) + ": backbone needs " + std::to_string(b.size()) +
                             " edges, above the target " + std::to_string(m) + "; raise the mean degree");
    }
    while (b.size() < m) {
        std::vector<NodeId> cycle;
        while (cycle.size() < motif) {
            const NodeId v = random_node(rng, n);
            if (std::find(cycle.begin(), cycle.end(), v) == cycle.end()) cycle.push_back(v);
        }
        close_cycle(b, cycle, m);
    }
    return Graph(n, orient(std::move(b.edges()), c.directed, rng), c.directed);
}

Graph make_eh(const GeneratorConfig& c, Rng& rng) {
    const double kd = c.mean_degree;
    if (kd != std::floor(kd)) throw ParameterError("EH: mean degree must be an integer");
    const auto k = static_cast<std::size_t>(kd);
    if (k >= c.n) throw ParameterError("EH: degree must be below N");
    if ((c.n * k) % 2 != 0) throw ParameterError("EH: N * k must be even");
    for (int restart = 0; restart < 1000; ++restart) {
        std::vector<NodeId> stubs;
        stubs.reserve(c.n * k);
        for (NodeId v = 0; v < c.n; ++v) stubs.insert(stubs.end(), k, v);
        EdgeBuilder b(c.n, false);
        bool stuck = false;
        while (!stubs.empty() && !stuck) {
            bool placed = false;
            for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
                const auto i = uniform_index(rng, stubs.size());
                const auto j = uniform_index(rng, stubs.size());
                if (i == j || stubs[i] == stubs[j] || b.contains(stubs[i], stubs[j])) continue;
                b.add(stubs[i], stubs[j]);
                const auto hi = std::max(i, j);
                const auto lo = std::min(i, j);
                stubs[hi] = stubs.back();
                stubs.pop_back();
                stubs[lo] = stubs.back();
                stubs.pop_back();
                placed = true;
            }
            if (!placed) {
                // Verify that no valid pair remains before giving up on this attempt.
                bool any = false;
                for (std::size_t i = 0; i < stubs.size() && !any; ++i)
                    for (std::size_t j = i + 1; j < stubs.size() && !any; ++j)
                        any = stubs[i] != stubs[j] && !b.contains(stubs[i], stubs[j]);
                stuck = !any;
            }
        }
        if (!stuck) return Graph(c.n, orient(std::move(b.edges()), c.directed, rng), c.directed);
    }
    throw ParameterError("EH: failed to realise a regular graph");
}

Graph make_ba(const GeneratorConfig& c, Rng& rng) {
    const auto m = static_cast<std::size_t>(param(c, "m", std::max(1.0, std::round(c.mean_degree / 2.0))));
    const std::size_t m0 = m + 1;
    if (m < 1 || c.n < m0) throw ParameterError("BA: need m >= 1 and N >= m + 1");
    EdgeBuilder b(c.n, false);
    std::vector<NodeId> repeated;
    for (NodeId u = 0; u < m0; ++u)
        for (NodeId v = u + 1; v < m0; ++v) {
            b.add(u, v);
            repeated.push_back(u);
            repeated.push_back(v);
        }
    std::vector<NodeId> chosen;
    for (NodeId v = static_cast<NodeId>(m0); v < c.n; ++v) {
        chosen.clear();
        while (chosen.size() < m) {
            const NodeId t = repeated[uniform_index(rng, repeated.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
        }
        for (NodeId t : chosen) {
            b.add(v, t);
            repeated.push_back(v);
            repeated.push_back(t);
        }
    }
    return Graph(c.n, orient(std::move(b.edges()), c.directed, rng), c.directed);
}

// Static model: endpoints drawn with probability proportional to (i+1)^-alpha.
EdgeBuilder static_scale_free(const GeneratorConfig& c, Rng& rng) {
    const double alpha = param(c, "alpha", 0.5);
    if (alpha <= 0.0 || alpha >= 1.0) throw ParameterError("SF: alpha must lie in (0, 1)");
    const std::size_t m = target_edges(c);
    if (m > c.n * (c.n - 1) / 2) throw ParameterError("SF: requested M exceeds the number of node pairs");
    std::vector<double> cum(c.n);
    double total = 0.0;
    for (std::size_t i = 0; i < c.n; ++i) {
        total += std::pow(static_cast<double>(i + 1), -alpha);
        cum[i] = total;
    }
    auto draw = [&]() {
        const double x = uniform_real(rng) * total;
        auto it = std::upper_bound(cum.begin(), cum.end(), x);
        return static_cast<NodeId>(std::min<std::ptrdiff_t>(it - cum.begin(), static_cast<std::ptrdiff_t>(c.n) - 1));
    };
    EdgeBuilder b(c.n, false);
    while (b.size() < m) b.add(draw(), draw());
    return b;
}

Graph make_sf(const GeneratorConfig& c, Rng& rng) {
    auto b = static_scale_free(c, rng);
    return Graph(c.n, orient(std::move(b.edges()), c.directed, rng), c.directed);
}

// Onion-like: static scale-free followed by degree-preserving swaps that
// are accepted only when they raise sum k_u * k_v over edges (assortativity).
Graph make_os(const GeneratorConfig& c, Rng& rng) {
    auto b = static_scale_free(c, rng);
    std::vector<std::size_t> deg(c.n, 0);
    for (const auto& e : b.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    const auto attempts = static_cast<std::size_t>(param(c, "swaps", 1000.0 * static_cast<double>(c.n)));
    if (b.size() >= 2) {
        for (std::size_t t = 0; t < attempts; ++t) {
            const auto i = uniform_index(rng, b.size());
            const auto j = uniform_index(rng, b.size());
            if (i == j) continue;
            Edge e1 = b.edges()[i];
            Edge e2 = b.edges()[j];
            if (rng() & 1) std::swap(e2.u, e2.v);
            const NodeId a = e1.u, bb = e1.v, cc = e2.u, d = e2.v;
            if (a == d || cc == bb || a == cc || bb == d) continue;
            if (b.contains(a, d) || b.contains(cc, bb)) continue;
            const auto before = deg[a] * deg[bb] + deg[cc] * deg[d];
            const auto after = deg[a] * deg[d] + deg[cc] * deg[bb];
            if (after <= before) continue;
            b.replace(i, {a, d});
            b.replace(j, {cc, bb});
        }
    }
    return Graph(c.n, orient(std::move(b.edges()), c.directed, rng), c.directed);
}

// q-snapback: backbone chain i -> i+1 plus snapback arcs i -> j for j <= i - 2.
Graph make_qs(const GeneratorConfig& c, Rng& rng) {
    const std::size_t n = c.n;
    if (n < 2) throw ParameterError("QS: N must be at least 2");
    EdgeBuilder b(n, c.directed);
    for (NodeId i = 0; i + 1 < n; ++i) b.add(i, i + 1);
    const std::size_t candidates = (n - 1) * (n - 2) / 2;
    auto q = c.params.find("q");
    if (q != c.params.end()) {
        if (q->second < 0.0 || q->second > 1.0) throw ParameterError("QS: q must lie in [0, 1]");
        for (NodeId i = 2; i < n; ++i)
            for (NodeId j = 0; j + 1 < i; ++j)
                if (bernoulli(rng, q->second)) b.add(i, j);
    } else {
        const std::size_t m = target_edges(c);
        if (m < n - 1) throw ParameterError("QS: target edge count is below the backbone size N-1");
        if (m - (n - 1) > candidates) throw ParameterError("QS: target edge count exceeds available snapback arcs");
        while (b.size() < m) {
            const NodeId i = static_cast<NodeId>(2 + uniform_index(rng, n - 2));
            const NodeId j = static_cast<NodeId>(uniform_index(rng, i - 1));
            b.add(i, j);
        }
    }
    return Graph(n, std::move(b.edges()), c.directed);
}

}  // namespace

Model parse_model(std::string_view name) {
    const std::string s = lower(name);
    if (s == "er") return Model::ER;
    if (s == "sw-nw" || s == "swnw" || s == "nw") return Model::SwNw;
    if (s == "sw-ws" || s == "swws" || s == "ws") return Model::SwWs;
    if (s == "rt") return Model::RT;
    if (s == "rh") return Model::RH;
    if (s == "eh") return Model::EH;
    if (s == "ba") return Model::BA;
    if (s == "sf") return Model::SF;
    if (s == "os" || s == "so") return Model::OS;
    if (s == "qs") return Model::QS;
    throw ParameterError("unknown model '" + std::string(name) + "'");
}

std::string model_name(Model model) {
    switch (model) {
        case Model::ER: return "ER";
        case Model::SwNw: return "SW-NW";
        case Model::SwWs: return "SW-WS";
        case Model::RT: return "RT";
        case Model::RH: return "RH";
        case Model::EH: return "EH";
        case Model::BA: return "BA";
        case Model::SF: return "SF";
        case Model::OS: return "OS";
        case Model::QS: return "QS";
    }
    return "?";
}

Graph generate(const GeneratorConfig& config) {
    if (config.n < 1) throw ParameterError("N must be at least 1");
    if (!(config.mean_degree >= 0.0)) throw ParameterError("mean degree must be non-negative");
    if (config.mean_degree >= static_cast<double>(config.n))
        throw ParameterError("mean degree must be below N");
    Rng rng(config.seed);
    switch (config.model) {
        case Model::ER: return make_er(config, rng);
        case Model::SwNw: return make_sw_nw(config, rng);
        case Model::SwWs: return make_sw_ws(config, rng);
        case Model::RT: return make_motif(config, rng, 3);
        case Model::RH: return make_motif(config, rng, 6);
        case Model::EH: return make_eh(config, rng);
        case Model::BA: return make_ba(config, rng);
        case Model::SF: return make_sf(config, rng);
        case Model::OS: return make_os(config, rng);
        case Model::QS: return make_qs(config, rng);
    }
    throw ParameterError("unknown model");
}

const std::vector<std::string>& canonical4_names(bool directed) {
    static const std::vector<std::string> und{"FUL", "LOP", "STR", "CTS", "CHA", "ISO"};
    static const std::vector<std::string> dir{"FUL", "WKF", "LOP", "RIN", "CTS", "SSO",
                                              "SSI", "SSR", "DCH", "UCH", "DIS", "ISO"};
    return directed ? dir : und;
}

Graph canonical4(std::string_view name, bool directed, std::uint64_t seed) {
    const std::string s = upper(name);
    std::vector<Edge> e;
    if (!directed) {
        if (s == "FUL") e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        else if (s == "LOP") e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        else if (s == "STR") e = {{0, 1}, {0, 2}, {0, 3}};
        // Labelled so smallest-id tie-breaking matches the published MBTA ranks.
        else if (s == "CTS") e = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
        else if (s == "CHA") e = {{3, 0}, {0, 1}, {1, 2}};
        else if (s == "ISO") e = {};
        else throw ParameterError("unknown undirected canonical network '" + std::string(name) + "'");
        return Graph(4, std::move(e), false);
    }
    if (s == "FUL") {
        for (NodeId u = 0; u < 4; ++u)
            for (NodeId v = 0; v < 4; ++v)
                if (u != v) e.push_back({u, v});
    } else if (s == "WKF") e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    else if (s == "LOP") e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    else if (s == "RIN") e = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    else if (s == "CTS") e = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
    else if (s == "SSO") e = {{0, 1}, {0, 2}, {0, 3}};
    else if (s == "SSI") e = {{1, 0}, {2, 0}, {3, 0}};
    else if (s == "SSR") {
        Rng rng(seed);
        for (NodeId leaf = 1; leaf < 4; ++leaf) {
            if (rng() & 1) e.push_back({leaf, 0});
            else e.push_back({0, leaf});
        }
    } else if (s == "DCH") e = {{0, 1}, {1, 2}, {2, 3}};
    else if (s == "UCH") e = {{0, 1}, {2, 1}, {2, 3}};
    else if (s == "DIS") e = {{0, 1}, {1, 2}, {2, 0}};
    else if (s == "ISO") e = {};
    else throw ParameterError("unknown directed canonical network '" + std::string(name) + "'");
    return Graph(4, std::move(e), true);
}

}  // namespace netrob
