// Batch command-line front end: network generation, attack simulation,
// robustness reports, rank tables, rewiring optimization and table reproduction.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "netrob/apriori.hpp"
#include "netrob/attacks.hpp"
#include "netrob/edge_list.hpp"
#include "netrob/engine.hpp"
#include "netrob/error.hpp"
#include "netrob/generators.hpp"
#include "netrob/optimizer.hpp"
#include "netrob/reproduce.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace netrob;

namespace {

// Raised for malformed flag values so they map to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <typename F>
auto usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParameterError& e) {
        throw UsageError(e.what());
    }
}

// Fields that do not apply to a network are reported as "na".
json optional_json(const std::optional<double>& v) { return v ? json(*v) : json("na"); }

void record_flags(cli::RunManifest& m, const CLI::App& app) {
    for (const auto* opt : app.get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string joined;
        for (const auto& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
        m.flag(opt->get_name(), joined.empty() ? "true" : joined);
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

// Options shared by attack, robustness and threshold.
struct AttackOptions {
    std::string strategy = "mdta";
    std::string target = "node";
    std::string alpha;
    std::string tie = "smallest";
    std::string degree = "total";
    bool static_scores = false;
    std::uint64_t seed = 42;
    std::size_t samples = 0;

    void attach(CLI::App* app) {
        app->add_option("--strategy", strategy, "random|mdta|mbta|exa|damage|critical|wprob")->capture_default_str();
        app->add_option("--target", target, "node|edge")->capture_default_str();
        app->add_option("--alpha", alpha, "wprob weights for degree,betweenness (e.g. 0.5,0.5)");
        app->add_option("--tie", tie, "smallest|random tie-breaking")->capture_default_str();
        app->add_option("--degree", degree, "degree used by MDTA on directed graphs: total|out|in")->capture_default_str();
        app->add_flag("--static", static_scores, "score targets once on the intact graph");
        app->add_option("--seed", seed, "master seed")->capture_default_str();
        app->add_option("--samples", samples, "EXA Monte Carlo permutation count");
    }

    AttackPlan plan() const {
        return usage([&] {
            AttackPlan p;
            p.strategy = parse_strategy(strategy);
            if (target == "node") p.target = TargetKind::Node;
            else if (target == "edge") p.target = TargetKind::Edge;
            else throw ParameterError("--target must be node or edge");
            p.adaptive = !static_scores;
            if (tie == "random") p.tie = TieBreak::Random;
            else if (tie != "smallest") throw ParameterError("--tie must be smallest or random");
            p.degree = parse_degree_kind(degree);
            p.seed = seed;
            if (!alpha.empty()) {
                p.alpha.clear();
                for (const auto& a : split(alpha)) {
                    try {
                        p.alpha.push_back(std::stod(a));
                    } catch (const std::exception&) {
                        throw ParameterError("--alpha expects numbers, got '" + a + "'");
                    }
                }
            }
            if (samples > 0) p.samples = samples;
            return p;
        });
    }
};

DriverEngine parse_drivers(const std::string& s) {
    if (s == "auto") return DriverEngine::Auto;
    if (s == "mit") return DriverEngine::MIT;
    if (s == "ect") return DriverEngine::ECT;
    throw UsageError("--drivers must be auto, mit or ect");
}

// Functional fields to sample for a trace file when no measure list narrows it.
MeasureSet trace_fields(const Graph& g, DriverEngine engine) {
    MeasureSet set = MeasureSet::connectivity();
    if (engine == DriverEngine::MIT || (engine == DriverEngine::Auto && g.directed())) set.mit = true;
    else if (engine == DriverEngine::ECT || g.node_count() <= kEctWarnSize) set.ect = true;
    return set;
}

// r1/r3 name the node forms; edge traces use their edge forms.
Measure for_target(Measure m, TargetKind kind) {
    if (kind == TargetKind::Edge) {
        if (m == Measure::R1) return Measure::R1e;
        if (m == Measure::R3) return Measure::R3e;
    }
    return m;
}

// Mean curve over every EXA order, written in trace-CSV layout.
void write_exa_curve(std::ostream& out, const Graph& g, const AttackPlan& plan, const MeasureSet& set,
                     const EvalOptions& opt) {
    ExaEnumerator perms(target_count(g, plan.target), plan.samples, plan.seed);
    AttackSequence order;
    std::vector<std::vector<double>> sum;
    std::size_t count = 0;
    AttackTrace first;
    while (perms.next(order)) {
        const auto t = run_sequence(g, plan.target, order, set);
        if (count == 0) first = t;
        std::ostringstream tmp;
        write_trace_csv(tmp, t, 1, opt);
        std::istringstream rows(tmp.str());
        std::string line;
        std::size_t r = 0;
        while (std::getline(rows, line)) {
            if (line.empty() || line[0] == '#' || line[0] == 'i') continue;
            const auto cells = split(line + ",", ',');
            if (sum.size() <= r) sum.emplace_back(cells.size(), 0.0);
            for (std::size_t c = 0; c < cells.size(); ++c) sum[r][c] += std::stod(cells[c]);
            ++r;
        }
        ++count;
    }
    out << "# exa-mean orders=" << count << " nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
    std::ostringstream header;
    write_trace_csv(header, first, 1, opt);
    std::istringstream h(header.str());
    std::string line;
    std::getline(h, line);
    std::getline(h, line);
    out << line << '\n';
    for (const auto& row : sum) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", row[c] / static_cast<double>(count));
            out << (c ? "," : "") << buf;
        }
        out << '\n';
    }
}

// Glob with '*' and '?' in the file-name component, or a canonical set name.
std::vector<std::pair<std::string, Graph>> load_nets(const std::string& which) {
    if (which == "canonical4-undirected") return canonical_nets(false);
    if (which == "canonical4-directed") return canonical_nets(true);
    const fs::path pattern(which);
    const fs::path dir = pattern.has_parent_path() ? pattern.parent_path() : fs::path(".");
    const std::string name = pattern.filename().string();
    std::function<bool(std::size_t, std::size_t, const std::string&)> match =
        [&](std::size_t i, std::size_t j, const std::string& s) -> bool {
        if (i == name.size()) return j == s.size();
        if (name[i] == '*') return match(i + 1, j, s) || (j < s.size() && match(i, j + 1, s));
        if (j < s.size() && (name[i] == '?' || name[i] == s[j])) return match(i + 1, j + 1, s);
        return false;
    };
    std::vector<fs::path> files;
    if (fs::is_directory(dir)) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && match(0, 0, entry.path().filename().string())) files.push_back(entry.path());
        }
    }
    if (files.empty()) throw Error("no network matches '" + which + "'");
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, Graph>> nets;
    for (const auto& f : files) nets.emplace_back(f.stem().string(), read_edge_list(f));
    return nets;
}

std::string rank_csv(const RankTable& table, bool values, bool ranks) {
    std::ostringstream out;
    out << "strategy,measure,quantity";
    for (const auto& n : table.nets) out << ',' << n;
    out << '\n';
    auto row = [&](const RankRow& r, const char* what, const std::vector<double>& xs) {
        out << r.strategy << ',' << measure_name(r.measure) << ',' << what;
        for (double x : xs) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", x);
            out << ',' << buf;
        }
        out << '\n';
    };
    for (const auto& r : table.rows) {
        if (values) row(r, "value", r.values);
        if (ranks) row(r, "rank", r.ranks);
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Network robustness toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", cli::kVersion);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker cap (default: NETROB_THREADS or all cores)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic network");
    std::string model = "er", gen_out;
    std::size_t n = 100;
    double k = 4.0;
    bool directed = false;
    std::uint64_t gen_seed = 42;
    std::vector<std::string> gen_params;
    gen->add_option("--model", model, "er|sw-nw|sw-ws|rt|rh|eh|ba|sf|os|qs")->capture_default_str();
    gen->add_option("--n", n, "node count")->capture_default_str();
    gen->add_option("--k", k, "mean total degree")->capture_default_str();
    gen->add_flag("--directed", directed);
    gen->add_option("--seed", gen_seed)->capture_default_str();
    gen->add_option("--param", gen_params, "model parameter key=value (repeatable)");
    gen->add_option("-o,--output", gen_out, "edge list path (default stdout)");

    // apriori
    auto* apr = app.add_subcommand("apriori", "one-shot topological and spectral measures");
    std::string apr_in, apr_out, apr_format = "json";
    apr->add_option("input", apr_in, "edge list")->required();
    apr->add_option("--format", apr_format, "output format (json)")->check(CLI::IsMember({"json"}));
    apr->add_option("-o,--output", apr_out, "JSON path (default stdout)");

    // attack
    auto* att = app.add_subcommand("attack", "simulate an attack and write its trace");
    std::string att_in, att_out, att_drivers = "auto";
    std::size_t att_stride = 1, att_stop = 0;
    AttackOptions att_opts;
    att->add_option("input", att_in, "edge list")->required();
    att_opts.attach(att);
    att->add_option("--drivers", att_drivers, "auto|mit|ect")->capture_default_str();
    att->add_option("--stride", att_stride, "write every n-th row")->capture_default_str();
    att->add_option("--stop-h", att_stop, "stop after H attacks");
    att->add_option("-o,--output", att_out, "trace CSV path (default stdout)");

    // robustness
    auto* rob = app.add_subcommand("robustness", "evaluate robustness measures");
    std::string rob_in, rob_out, rob_trace, rob_measures = "r1", rob_scheme = "cd,td", rob_drivers = "auto";
    std::size_t rob_repeats = 1, rob_stop = 0;
    double rob_p = 0.05;
    bool rob_fixed = false;
    AttackOptions rob_opts;
    rob->add_option("input", rob_in, "edge list")->required();
    rob_opts.attach(rob);
    rob->add_option("--measures", rob_measures, "comma list: r1,r2,r1e,r3,r3e,r6,r7,r8,r9,r10,r15,r15n")
        ->capture_default_str();
    rob->add_option("--scheme", rob_scheme, "cd, td or cd,td")->capture_default_str();
    rob->add_option("--repeats", rob_repeats, "independent runs averaged (R11)")->capture_default_str();
    rob->add_option("--stop-h", rob_stop, "truncate after H attacks");
    rob->add_option("--p", rob_p, "threshold detection parameter")->capture_default_str();
    rob->add_option("--drivers", rob_drivers, "auto|mit|ect")->capture_default_str();
    rob->add_flag("--fixed-denominator", rob_fixed, "use N instead of N-i for driver densities");
    rob->add_option("-o,--output", rob_out, "report JSON (default stdout)");
    rob->add_option("--trace", rob_trace, "also write the first run's trace CSV");

    // compare
    auto* cmp = app.add_subcommand("compare", "rank several networks");
    std::string cmp_nets, cmp_strategies = "exa,mdta,mbta", cmp_measures = "r1,r15,r3,r7", cmp_out, cmp_drivers = "auto";
    bool cmp_ranks = false;
    std::uint64_t cmp_seed = 42;
    cmp->add_option("--nets", cmp_nets, "glob of edge lists, or canonical4-undirected / canonical4-directed")
        ->required();
    cmp->add_option("--strategies", cmp_strategies)->capture_default_str();
    cmp->add_option("--measures", cmp_measures)->capture_default_str();
    cmp->add_option("--drivers", cmp_drivers, "auto|mit|ect")->capture_default_str();
    cmp->add_option("--seed", cmp_seed)->capture_default_str();
    cmp->add_flag("--ranks", cmp_ranks, "emit rank rows only");
    cmp->add_option("-o,--output", cmp_out, "CSV path (default stdout)");

    // threshold
    auto* thr = app.add_subcommand("threshold", "detect the destruction threshold T");
    std::string thr_in, thr_out;
    double thr_p = 0.05;
    AttackOptions thr_opts;
    thr->add_option("input", thr_in, "edge list, or a trace .csv written by attack")->required();
    thr_opts.attach(thr);
    thr->add_option("--p", thr_p)->capture_default_str();
    thr->add_option("-o,--output", thr_out, "JSON path (default stdout)");

    // optimize
    auto* opt = app.add_subcommand("optimize", "rewire a network towards higher robustness");
    std::string opt_in, opt_out, opt_log, opt_measure = "r1", opt_algo = "hc", opt_preserve = "degrees",
                                          opt_scheme = "cd";
    std::size_t opt_iters = 1000, opt_repeats = 5;
    double opt_temp = 0.01, opt_cool = 0.995;
    bool opt_connected = false;
    AttackOptions opt_attack;
    opt->add_option("input", opt_in, "edge list")->required();
    opt->add_option("--measure", opt_measure)->capture_default_str();
    opt_attack.attach(opt);
    opt->add_option("--algo", opt_algo, "hc|sa")->capture_default_str();
    opt->add_option("--iters", opt_iters)->capture_default_str();
    opt->add_option("--sa-temp", opt_temp)->capture_default_str();
    opt->add_option("--sa-cool", opt_cool)->capture_default_str();
    opt->add_option("--preserve", opt_preserve, "degrees|avg|none")->capture_default_str();
    opt->add_option("--scheme", opt_scheme, "cd|td")->capture_default_str();
    opt->add_option("--repeats", opt_repeats, "runs per candidate for random objectives")->capture_default_str();
    opt->add_flag("--keep-connected", opt_connected);
    opt->add_option("-o,--output", opt_out, "best network edge list")->required();
    opt->add_option("--log", opt_log, "iteration log CSV");

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "regenerate the comparison tables");
    std::string rep_scale = "desk", rep_dir = "tables";
    bool rep_edges = false;
    std::uint64_t rep_seed = 42;
    rep->add_option("--scale", rep_scale, "desk|full")->capture_default_str();
    rep->add_option("--out-dir", rep_dir)->capture_default_str();
    rep->add_option("--seed", rep_seed)->capture_default_str();
    rep->add_flag("--edges", rep_edges, "include the edge-MBTA columns (slow)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (*gen) {
        GeneratorConfig c;
        c.model = usage([&] { return parse_model(model); });
        c.n = n;
        c.mean_degree = k;
        c.directed = directed;
        c.seed = gen_seed;
        for (const auto& kv : gen_params) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + kv + "'");
            try {
                c.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw UsageError("--param value must be numeric: '" + kv + "'");
            }
        }
        const Graph g = usage([&] { return generate(c); });
        std::ostringstream out;
        write_edge_list(out, g);
        write_text(gen_out, out.str());
        std::cerr << "gen: " << model_name(c.model) << " N=" << g.node_count() << " M=" << g.edge_count() << '\n';
        return 0;
    }

    if (*apr) {
        const Graph g = read_edge_list(apr_in);
        cli::RunManifest manifest("apriori", 0);
        record_flags(manifest, *apr);
        manifest.input(apr_in);
        const auto r = apriori(g);
        json j;
        j["net"] = fs::path(apr_in).stem().string();
        j["EFF"] = optional_json(r.eff);
        j["NB"] = optional_json(r.nb);
        j["EB"] = optional_json(r.eb);
        j["CC"] = optional_json(r.cc);
        j["AS-SR"] = optional_json(r.as_sr);
        j["AS-SG"] = optional_json(r.as_sg);
        j["AS-NC"] = optional_json(r.as_nc);
        j["LS-AC"] = optional_json(r.ls_ac);
        j["LS-NS"] = optional_json(r.ls_ns);
        j["LS-NS-count"] = r.ls_ns_exact ? json(*r.ls_ns_exact) : json("na");
        j["LS-ER"] = optional_json(r.ls_er);
        j["manifest"] = manifest.to_json();
        write_text(apr_out, j.dump(2) + "\n");
        return 0;
    }

    if (*att) {
        const Graph g = read_edge_list(att_in);
        const AttackPlan plan = att_opts.plan();
        usage([&] { validate(plan, g); return 0; });
        if (att_stride == 0) throw UsageError("--stride must be positive");
        EvalOptions eo;
        eo.drivers = parse_drivers(att_drivers);
        const MeasureSet set = trace_fields(g, eo.drivers);
        std::ostringstream out;
        if (plan.strategy == Strategy::EXA) {
            write_exa_curve(out, g, plan, set, eo);
        } else {
            StopRule stop;
            if (att_stop > 0) stop.max_attacks = att_stop;
            std::cerr << "attack: " << strategy_name(plan.strategy) << " on " << att_in << '\n';
            write_trace_csv(out, run_trace(g, plan, set, stop), att_stride, eo);
        }
        write_text(att_out, out.str());
        return 0;
    }

    if (*rob) {
        const Graph g = read_edge_list(rob_in);
        AttackPlan plan = rob_opts.plan();
        usage([&] { validate(plan, g); return 0; });
        std::vector<Measure> measures;
        for (const auto& name : split(rob_measures)) measures.push_back(for_target(usage([&] { return parse_measure(name); }), plan.target));
        bool cd = false, td = false;
        for (const auto& s : split(rob_scheme)) {
            if (s == "cd") cd = true;
            else if (s == "td") td = true;
            else throw UsageError("--scheme takes cd and/or td");
        }
        if (!(rob_p > 0.0 && rob_p < 1.0)) throw UsageError("--p must lie in (0, 1)");
        if (rob_repeats == 0) throw UsageError("--repeats must be positive");
        EvalOptions eo;
        eo.drivers = parse_drivers(rob_drivers);
        eo.fixed_denominator = rob_fixed;
        StopRule stop;
        if (rob_stop > 0) {
            stop.max_attacks = rob_stop;
            eo.allow_truncated = true;
        }
        cli::RunManifest manifest("robustness", rob_opts.seed);
        record_flags(manifest, *rob);
        manifest.input(rob_in);

        json j;
        j["net"] = fs::path(rob_in).stem().string();
        j["strategy"] = strategy_name(plan.strategy);
        j["target"] = rob_opts.target;
        j["seed"] = rob_opts.seed;
        j["repeats"] = rob_repeats;
        if (plan.strategy == Strategy::EXA) {
            for (auto m : measures) {
                const auto r = usage([&] { return exa_measure(g, m, plan.target, plan.samples, plan.seed, eo); });
                j[measure_name(m)] = {{"cd", r.mean}, {"td", nullptr}, {"stderr", r.stderr_}, {"orders", r.count}};
            }
            if (td) std::cerr << "robustness: TD is not defined for the exhaustive average; reported as null\n";
        } else {
            MeasureSet set = required_measures(measures, g.directed(), eo.drivers);
            set.ncc = set.ncc || td;
            std::vector<RobustnessReport> reps(rob_repeats);
            std::vector<AttackTrace> first(1);
            parallel_for(rob_repeats, resolve_threads(threads), [&](std::size_t p) {
                AttackPlan pp = plan;
                if (rob_repeats > 1) pp.seed = derive_seed(plan.seed, p, 0);
                auto trace = run_trace(g, pp, set, stop);
                reps[p] = report(trace, measures, cd, td, rob_p, eo);
                if (p == 0) first[0] = std::move(trace);
            });
            for (auto m : measures) {
                double scd = 0.0, std_ = 0.0;
                for (const auto& r : reps) {
                    scd += r.values.at(m).cd.value_or(0.0);
                    std_ += r.values.at(m).td.value_or(0.0);
                }
                const double P = static_cast<double>(rob_repeats);
                j[measure_name(m)] = {{"cd", cd ? json(scd / P) : json(nullptr)},
                                      {"td", td ? json(std_ / P) : json(nullptr)}};
            }
            if (td) {
                double T = 0.0;
                for (const auto& r : reps) T += static_cast<double>(r.threshold->T);
                T /= static_cast<double>(rob_repeats);
                const auto& th = *reps[0].threshold;
                j["threshold"] = {{"T", T},
                                  {"p", rob_p},
                                  {"window", th.window},
                                  {"detected", th.detected ? json(*th.detected) : json(nullptr)},
                                  {"mode", th.mode == ThresholdMode::NodeDecrease ? "node-decrease" : "edge-stagnation"}};
            }
            if (!rob_trace.empty()) {
                std::ostringstream out;
                write_trace_csv(out, first[0], 1, eo);
                write_text(rob_trace, out.str());
            }
        }
        j["manifest"] = manifest.to_json();
        write_text(rob_out, j.dump(2) + "\n");
        return 0;
    }

    if (*cmp) {
        auto nets = load_nets(cmp_nets);
        std::vector<AttackPlan> plans;
        for (const auto& s : split(cmp_strategies)) {
            AttackPlan p;
            p.strategy = usage([&] { return parse_strategy(s); });
            p.seed = cmp_seed;
            plans.push_back(p);
        }
        std::vector<Measure> measures;
        for (const auto& name : split(cmp_measures)) measures.push_back(usage([&] { return parse_measure(name); }));
        EvalOptions eo;
        eo.drivers = parse_drivers(cmp_drivers);
        std::cerr << "compare: " << nets.size() << " networks\n";
        const auto table = usage([&] { return rank_table(nets, plans, measures, eo, threads); });
        write_text(cmp_out, rank_csv(table, !cmp_ranks, true));
        return 0;
    }

    if (*thr) {
        if (!(thr_p > 0.0 && thr_p < 1.0)) throw UsageError("--p must lie in (0, 1)");
        cli::RunManifest manifest("threshold", thr_opts.seed);
        record_flags(manifest, *thr);
        manifest.input(thr_in);
        const bool from_trace = fs::path(thr_in).extension() == ".csv";
        AttackTrace trace;
        const AttackPlan plan = thr_opts.plan();
        if (from_trace) {
            std::ifstream in(thr_in);
            if (!in) throw ParseError("cannot open trace '" + thr_in + "'");
            trace = read_trace_csv(in);
        } else {
            const Graph g = read_edge_list(thr_in);
            if (plan.strategy == Strategy::EXA) throw UsageError("threshold needs a single attack order, not exa");
            usage([&] { validate(plan, g); return 0; });
            trace = run_trace(g, plan, MeasureSet{false, true, false, false, false});
        }
        const auto th = detect_threshold(trace, thr_p);
        json j;
        j["net"] = fs::path(thr_in).stem().string();
        j["strategy"] = from_trace ? json("recorded") : json(strategy_name(plan.strategy));
        j["T"] = th.T;
        j["p"] = th.p;
        j["window"] = th.window;
        j["detected"] = th.detected ? json(*th.detected) : json(nullptr);
        j["fallback"] = th.fallback;
        j["mode"] = th.mode == ThresholdMode::NodeDecrease ? "node-decrease" : "edge-stagnation";
        j["ncc"] = th.ncc;
        j["manifest"] = manifest.to_json();
        write_text(thr_out, j.dump(2) + "\n");
        return 0;
    }

    if (*opt) {
        const Graph g = read_edge_list(opt_in);
        OptimizeConfig cfg;
        cfg.objective.measure = for_target(usage([&] { return parse_measure(opt_measure); }), opt_attack.plan().target);
        cfg.objective.plan = opt_attack.plan();
        cfg.objective.repeats = opt_repeats;
        if (opt_scheme == "td") cfg.objective.scheme = Scheme::TD;
        else if (opt_scheme != "cd") throw UsageError("--scheme must be cd or td");
        if (opt_algo == "hc") cfg.algorithm = Algorithm::HillClimb;
        else if (opt_algo == "sa") cfg.algorithm = Algorithm::Annealing;
        else throw UsageError("--algo must be hc or sa");
        if (opt_preserve == "degrees") cfg.constraint = Constraint::Degrees;
        else if (opt_preserve == "avg") cfg.constraint = Constraint::Average;
        else if (opt_preserve == "none") cfg.constraint = Constraint::None;
        else throw UsageError("--preserve must be degrees, avg or none");
        cfg.iterations = opt_iters;
        cfg.sa_temperature = opt_temp;
        cfg.sa_cooling = opt_cool;
        cfg.keep_connected = opt_connected;
        cfg.seed = opt_attack.seed;
        std::cerr << "optimize: " << opt_iters << " iterations\n";
        const auto result = usage([&] { return optimize(g, cfg); });
        write_edge_list(fs::path(opt_out), result.best);
        if (!opt_log.empty()) {
            std::ostringstream log;
            log << "iteration,candidate,accepted,best,removed,added,note\n";
            for (const auto& e : result.log) {
                char buf[64];
                log << e.iteration << ',';
                if (e.candidate) {
                    std::snprintf(buf, sizeof buf, "%.9g", *e.candidate);
                    log << buf;
                }
                std::snprintf(buf, sizeof buf, "%.9g", e.best);
                log << ',' << (e.accepted ? 1 : 0) << ',' << buf << ',';
                for (std::size_t i = 0; i < e.removed.size(); ++i)
                    log << (i ? " " : "") << e.removed[i].u << '-' << e.removed[i].v;
                log << ',';
                for (std::size_t i = 0; i < e.added.size(); ++i)
                    log << (i ? " " : "") << e.added[i].u << '-' << e.added[i].v;
                log << ',' << e.note << '\n';
            }
            write_text(opt_log, log.str());
        }
        std::cerr << "optimize: " << measure_name(cfg.objective.measure) << ' ' << result.initial << " -> "
                  << result.best_value << '\n';
        if (result.error) {
            std::cerr << "error: objective evaluation failed: " << *result.error << '\n';
            return 2;
        }
        return 0;
    }

    if (*rep) {
        if (rep_scale == "paper") rep_scale = "full";
        if (rep_scale != "desk" && rep_scale != "full") throw UsageError("--scale must be desk or full");
        const bool full = rep_scale == "full";
        fs::create_directories(rep_dir);
        cli::RunManifest manifest("reproduce", rep_seed);
        record_flags(manifest, *rep);

        for (bool dir : {false, true}) {
            std::cerr << "reproduce: " << (dir ? "directed" : "undirected") << " 4-node rank table\n";
            const auto table = rank_table(canonical_nets(dir), table34_plans(), table34_measures(), {}, threads);
            write_text((fs::path(rep_dir) / (dir ? "table3.csv" : "table4.csv")).string(), rank_csv(table, true, true));
        }

        const std::size_t N = full ? 1000 : 500;
        const std::size_t seeds = full ? 10 : 5;
        std::ostringstream t2;
        t2 << "model,N,seeds,node_ctrl_cd,node_ctrl_td,node_conn_cd,node_conn_td,node_comm_cd,node_comm_td,node_T";
        if (rep_edges) t2 << ",edge_ctrl_cd,edge_ctrl_td,edge_conn_cd,edge_conn_td,edge_comm_cd,edge_comm_td,edge_T";
        t2 << '\n';
        for (auto m : table2_models()) {
            std::cerr << "reproduce: synthetic row " << model_name(m) << " (N=" << N << ", " << seeds << " seeds)\n";
            const auto r = table2_row(m, N, seeds, rep_edges, rep_seed, threads);
            char buf[512];
            std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.2f", r.model.c_str(), N, seeds,
                          r.node_controllability.cd, r.node_controllability.td, r.node_connectivity.cd,
                          r.node_connectivity.td, r.node_communication.cd, r.node_communication.td, r.node_T);
            t2 << buf;
            if (rep_edges) {
                std::snprintf(buf, sizeof buf, ",%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.2f", r.edge_controllability->cd,
                              r.edge_controllability->td, r.edge_connectivity->cd, r.edge_connectivity->td,
                              r.edge_communication->cd, r.edge_communication->td, *r.edge_T);
                t2 << buf;
            }
            t2 << '\n';
        }
        write_text((fs::path(rep_dir) / "table2.csv").string(), t2.str());
        write_text((fs::path(rep_dir) / "manifest.json").string(), json{{"manifest", manifest.to_json()}}.dump(2) + "\n");
        std::cerr << "reproduce: wrote " << rep_dir << '\n';
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
