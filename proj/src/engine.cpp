#include "netrob/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "netrob/error.hpp"

namespace netrob {

namespace {

// Incremental form of the successive-detection rule, shared by run_trace's
// early stop and detect_threshold.
class ThresholdScanner {
public:
    ThresholdScanner(TargetKind kind, std::size_t n, double p)
        : mode_(kind == TargetKind::Node ? ThresholdMode::NodeDecrease : ThresholdMode::EdgeStagnation),
          window_(std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(p * static_cast<double>(n))))) {}

    /// Feeds D(i) for i = 0, 1, ...; returns true once detection fires.
    bool feed(std::size_t d) {
        const std::size_t i = d_.size();
        d_.push_back(d);
        if (detected_) return true;
        if (i == 0) return false;
        bool hit = false;
        if (mode_ == ThresholdMode::NodeDecrease) {
            hit = d < d_[i - 1];
        } else {
            // Stagnation only counts once the edge attack has started fragmenting the network.
            if (d > d_[0]) rising_ = true;
            hit = rising_ && d == d_[i - 1];
        }
        run_ = hit ? run_ + 1 : 0;
        if (run_ == window_) detected_ = i - window_;
        return detected_.has_value();
    }

    std::optional<std::size_t> detected() const { return detected_; }
    std::size_t window() const { return window_; }
    ThresholdMode mode() const { return mode_; }

private:
    ThresholdMode mode_;
    std::size_t window_;
    std::vector<std::size_t> d_;
    std::size_t run_ = 0;
    bool rising_ = false;
    std::optional<std::size_t> detected_;
};

std::size_t need(const std::optional<std::size_t>& v, const char* what) {
    if (!v) throw ParameterError(std::string("trace has no ") + what + " samples");
    return *v;
}

std::uint64_t need64(const std::optional<std::uint64_t>& v, const char* what) {
    if (!v) throw ParameterError(std::string("trace has no ") + what + " samples");
    return *v;
}

double denominator(const AttackTrace& t, const FunctionalSample& s, const EvalOptions& opt) {
    if (opt.fixed_denominator) return static_cast<double>(std::max<std::size_t>(t.n, 1));
    return static_cast<double>(std::max<std::size_t>(s.alive, 1));
}

std::size_t drivers(const FunctionalSample& s, const EvalOptions& opt) {
    switch (opt.drivers) {
        case DriverEngine::MIT: return need(s.drivers_mit, "MIT driver");
        case DriverEngine::ECT: return need(s.drivers_ect, "ECT driver");
        case DriverEngine::Auto:
            if (s.drivers_mit) return *s.drivers_mit;
            return need(s.drivers_ect, "driver");
    }
    return 0;
}

double format_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

std::string fmt9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

}  // namespace

double AttackTrace::delta(std::size_t i) const {
    const std::size_t k = kind == TargetKind::Node ? n : m;
    return k == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(k);
}

AttackTrace run_trace(const Graph& graph, const AttackPlan& plan, const MeasureSet& which, const StopRule& stop) {
    if (plan.strategy == Strategy::EXA) throw ParameterError("EXA is evaluated over all orders; use exa_measure");
    MeasureSet set = which;
    if (stop.at_threshold) set.ncc = true;

    AttackTrace trace;
    trace.kind = plan.target;
    trace.n = graph.node_count();
    trace.m = graph.edge_count();
    trace.directed = graph.directed();

    TargetSelector selector(graph, plan);
    Rng rng(plan.seed);
    RemovalMask mask(graph);
    ThresholdScanner scanner(plan.target, graph.node_count(), stop.p);

    auto record = [&](std::size_t i) {
        auto s = sample(graph, mask, set);
        s.step = i;
        trace.samples.push_back(s);
        return stop.at_threshold && scanner.feed(*s.ncc);
    };

    std::size_t limit = target_count(graph, plan.target);
    if (stop.max_attacks) limit = std::min(limit, *stop.max_attacks);
    if (record(0)) return trace;
    for (std::size_t i = 1; i <= limit; ++i) {
        const auto id = selector.next(mask, rng);
        mask.remove(graph, {plan.target, id});
        trace.sequence.push_back(id);
        if (record(i)) break;
    }
    return trace;
}

AttackTrace run_sequence(const Graph& graph, TargetKind kind, const AttackSequence& order, const MeasureSet& which,
                         std::optional<std::size_t> max_attacks) {
    AttackTrace trace;
    trace.kind = kind;
    trace.n = graph.node_count();
    trace.m = graph.edge_count();
    trace.directed = graph.directed();
    RemovalMask mask(graph);
    trace.samples.push_back(sample(graph, mask, which));
    std::size_t limit = order.size();
    if (max_attacks) limit = std::min(limit, *max_attacks);
    for (std::size_t i = 0; i < limit; ++i) {
        mask.remove(graph, {kind, order[i]});
        trace.sequence.push_back(order[i]);
        auto s = sample(graph, mask, which);
        s.step = i + 1;
        trace.samples.push_back(s);
    }
    return trace;
}

Measure parse_measure(std::string_view name) {
    std::string s(name);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    static const std::map<std::string, Measure> table{
        {"r1", Measure::R1},   {"r2", Measure::R2},   {"r1e", Measure::R1e}, {"r3", Measure::R3},
        {"r3e", Measure::R3e}, {"r6", Measure::R6},   {"r7", Measure::R7},   {"r8", Measure::R8},
        {"r9", Measure::R9},   {"r10", Measure::R10}, {"r15", Measure::R15}, {"r15n", Measure::R15n}};
    auto it = table.find(s);
    if (it == table.end()) throw ParameterError("unknown measure '" + std::string(name) + "'");
    return it->second;
}

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::R1: return "r1";
        case Measure::R2: return "r2";
        case Measure::R1e: return "r1e";
        case Measure::R3: return "r3";
        case Measure::R3e: return "r3e";
        case Measure::R6: return "r6";
        case Measure::R7: return "r7";
        case Measure::R8: return "r8";
        case Measure::R9: return "r9";
        case Measure::R10: return "r10";
        case Measure::R15: return "r15";
        case Measure::R15n: return "r15n";
    }
    return "?";
}

bool higher_is_better(Measure m) {
    return !(m == Measure::R3 || m == Measure::R3e || m == Measure::R15 || m == Measure::R15n);
}

MeasureSet required_measures(const std::vector<Measure>& measures, bool directed, DriverEngine engine) {
    MeasureSet set{false, false, false, false, false};
    for (auto m : measures) {
        switch (m) {
            case Measure::R1:
            case Measure::R2:
            case Measure::R1e:
                set.lcc = true;
                break;
            case Measure::R10:
                set.lcc = true;
                [[fallthrough]];
            case Measure::R3:
            case Measure::R3e:
            case Measure::R9:
                if (engine == DriverEngine::MIT || (engine == DriverEngine::Auto && directed)) set.mit = true;
                else set.ect = true;
                break;
            case Measure::R8:
                set.ect = true;
                break;
            case Measure::R6:
            case Measure::R7:
                set.cnp = true;
                break;
            case Measure::R15:
            case Measure::R15n:
                set.ncc = true;
                break;
        }
    }
    return set;
}

double step_value(const AttackTrace& t, Measure m, std::size_t i, const EvalOptions& opt) {
    const auto& s = t.samples.at(i);
    const double n = static_cast<double>(t.n);
    switch (m) {
        case Measure::R1:
        case Measure::R1e:
            return format_ratio(static_cast<double>(need(s.lcc, "LCC")), n);
        case Measure::R2:
            return static_cast<double>(need(s.lcc, "LCC")) / static_cast<double>(std::max<std::size_t>(s.alive, 1));
        case Measure::R3:
        case Measure::R3e:
            return static_cast<double>(drivers(s, opt)) / denominator(t, s, opt);
        case Measure::R9:
            return 1.0 - static_cast<double>(drivers(s, opt)) / denominator(t, s, opt);
        case Measure::R10: {
            const double nl = format_ratio(static_cast<double>(need(s.lcc, "LCC")), n);
            return nl / (static_cast<double>(drivers(s, opt)) / denominator(t, s, opt));
        }
        case Measure::R8:
            return static_cast<double>(need(s.rank_a, "adjacency rank")) / denominator(t, s, opt);
        case Measure::R6:
            return format_ratio(static_cast<double>(need64(s.cnp_exact, "CNP")), n * (n - 1.0) / 2.0);
        case Measure::R7:
            return format_ratio(static_cast<double>(need64(s.cnp_sq, "CNP")), n * n);
        case Measure::R15:
            return static_cast<double>(need(s.ncc, "NCC"));
        case Measure::R15n:
            return format_ratio(static_cast<double>(need(s.ncc, "NCC")), n);
    }
    return 0.0;
}

double evaluate(const AttackTrace& t, Measure m, const EvalOptions& opt, std::optional<std::size_t> threshold) {
    if (t.samples.empty()) throw ParameterError("empty trace");
    std::size_t end = t.eval_end();
    if (threshold) {
        if (*threshold > end) throw ParameterError("threshold T lies beyond the attack range");
        end = *threshold;
    }
    if (end >= t.samples.size()) {
        if (!opt.allow_truncated) {
            throw ParameterError("trace stops at step " + std::to_string(t.samples.size() - 1) +
                                 " but the measure needs step " + std::to_string(end));
        }
        end = t.samples.size() - 1;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i <= end; ++i) sum += step_value(t, m, i, opt);
    return sum / static_cast<double>(end + 1);
}

ThresholdResult detect_threshold(const AttackTrace& trace, double p) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("threshold p must lie in (0, 1)");
    ThresholdScanner scanner(trace.kind, trace.n, p);
    ThresholdResult r;
    r.p = p;
    r.window = scanner.window();
    r.mode = scanner.mode();
    const std::size_t last = std::min(trace.eval_end(), trace.samples.empty() ? 0 : trace.samples.size() - 1);
    for (std::size_t i = 0; i <= last && i < trace.samples.size(); ++i) {
        const auto d = need(trace.samples[i].ncc, "NCC");
        r.ncc.push_back(d);
        scanner.feed(d);
    }
    r.detected = scanner.detected();
    for (std::size_t i = 0; i < r.ncc.size(); ++i) {
        if (r.ncc[i] >= r.ncc[r.fallback]) r.fallback = i;
    }
    r.T = r.detected.value_or(r.fallback);
    return r;
}

RobustnessReport report(const AttackTrace& trace, const std::vector<Measure>& measures, bool cd, bool td, double p,
                        const EvalOptions& opt) {
    RobustnessReport out;
    if (td) out.threshold = detect_threshold(trace, p);
    for (auto m : measures) {
        MeasureValue v;
        if (cd) v.cd = evaluate(trace, m, opt);
        if (td) v.td = evaluate(trace, m, opt, out.threshold->T);
        out.values[m] = v;
    }
    return out;
}

namespace {

std::vector<ExaResult> exa_many(const Graph& graph, const std::vector<Measure>& measures, TargetKind kind,
                                std::optional<std::size_t> samples, std::uint64_t seed, const EvalOptions& opt) {
    const MeasureSet set = required_measures(measures, graph.directed(), opt.drivers);
    ExaEnumerator perms(target_count(graph, kind), samples, seed);
    std::vector<double> mean(measures.size(), 0.0), m2(measures.size(), 0.0);
    std::size_t count = 0;
    AttackSequence order;
    while (perms.next(order)) {
        const auto trace = run_sequence(graph, kind, order, set);
        ++count;
        for (std::size_t j = 0; j < measures.size(); ++j) {
            const double x = evaluate(trace, measures[j], opt);
            const double d = x - mean[j];
            mean[j] += d / static_cast<double>(count);
            m2[j] += d * (x - mean[j]);
        }
    }
    std::vector<ExaResult> out(measures.size());
    for (std::size_t j = 0; j < measures.size(); ++j) {
        out[j].mean = mean[j];
        out[j].count = count;
        out[j].exact = perms.exact();
        if (!perms.exact() && count > 1)
            out[j].stderr_ = std::sqrt(m2[j] / static_cast<double>(count - 1) / static_cast<double>(count));
    }
    return out;
}

std::vector<double> cell_values(const Graph& graph, const AttackPlan& plan, const std::vector<Measure>& measures,
                                const EvalOptions& opt) {
    std::vector<double> out;
    if (plan.strategy == Strategy::EXA) {
        for (const auto& r : exa_many(graph, measures, plan.target, plan.samples, plan.seed, opt)) out.push_back(r.mean);
        return out;
    }
    const auto trace = run_trace(graph, plan, required_measures(measures, graph.directed(), opt.drivers));
    for (auto m : measures) out.push_back(evaluate(trace, m, opt));
    return out;
}

}  // namespace

ExaResult exa_measure(const Graph& graph, Measure m, TargetKind kind, std::optional<std::size_t> samples,
                      std::uint64_t seed, const EvalOptions& opt) {
    return exa_many(graph, {m}, kind, samples, seed, opt).front();
}

double measure_value(const Graph& graph, const AttackPlan& plan, Measure m, const EvalOptions& opt) {
    return cell_values(graph, plan, {m}, opt).front();
}

AveragedReport averaged(const Graph& graph, const std::vector<AttackPlan>& plans, Measure m, std::size_t repeats,
                        const EvalOptions& opt, unsigned threads) {
    if (plans.empty() || repeats == 0) throw ParameterError("averaging needs at least one plan and one repeat");
    AveragedReport out;
    const std::size_t q = plans.size();
    out.values.assign(repeats, std::vector<double>(q, 0.0));
    parallel_for(repeats * q, resolve_threads(threads), [&](std::size_t cell) {
        const std::size_t rp = cell / q, rq = cell % q;
        AttackPlan plan = plans[rq];
        plan.seed = derive_seed(plans[rq].seed, rp, rq);
        out.values[rp][rq] = measure_value(graph, plan, m, opt);
    });
    out.strategy_means.assign(q, 0.0);
    double total = 0.0;
    for (const auto& row : out.values) {
        for (std::size_t j = 0; j < q; ++j) {
            out.strategy_means[j] += row[j] / static_cast<double>(repeats);
            total += row[j];
        }
    }
    out.r11 = total / static_cast<double>(repeats * q);
    return out;
}

std::vector<double> fractional_ranks(const std::vector<double>& values, bool higher_better) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return higher_better ? values[a] > values[b] : values[a] < values[b];
    });
    auto tied = [&](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); };
    std::vector<double> ranks(values.size(), 0.0);
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && tied(values[order[j]], values[order[i]])) ++j;
        const double r = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = r;
        i = j;
    }
    return ranks;
}

RankTable rank_table(const std::vector<std::pair<std::string, Graph>>& nets, const std::vector<AttackPlan>& plans,
                     const std::vector<Measure>& measures, const EvalOptions& opt, unsigned threads) {
    RankTable table;
    for (const auto& [name, g] : nets) table.nets.push_back(name);
    // values[plan][net][measure]
    std::vector<std::vector<std::vector<double>>> values(plans.size(), std::vector<std::vector<double>>(nets.size()));
    parallel_for(plans.size() * nets.size(), resolve_threads(threads), [&](std::size_t cell) {
        const std::size_t p = cell / nets.size(), k = cell % nets.size();
        values[p][k] = cell_values(nets[k].second, plans[p], measures, opt);
    });
    for (std::size_t p = 0; p < plans.size(); ++p) {
        for (std::size_t j = 0; j < measures.size(); ++j) {
            RankRow row;
            row.strategy = strategy_name(plans[p].strategy);
            if (!plans[p].adaptive && (plans[p].strategy == Strategy::MDTA || plans[p].strategy == Strategy::MBTA))
                row.strategy += "-static";
            row.measure = measures[j];
            for (std::size_t k = 0; k < nets.size(); ++k) row.values.push_back(values[p][k][j]);
            row.ranks = fractional_ranks(row.values, higher_is_better(measures[j]));
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

void write_trace_csv(std::ostream& out, const AttackTrace& t, std::size_t stride, const EvalOptions& opt) {
    if (stride == 0) throw ParameterError("stride must be positive");
    const bool has_mit = !t.samples.empty() && t.samples[0].drivers_mit.has_value();
    const bool has_ect = !t.samples.empty() && t.samples[0].drivers_ect.has_value();
    const bool use_mit = opt.drivers == DriverEngine::MIT || (opt.drivers == DriverEngine::Auto && has_mit);
    const bool has_drivers = use_mit ? has_mit : has_ect;
    const bool has_rank = !t.samples.empty() && t.samples[0].rank_a.has_value();
    const double n = static_cast<double>(t.n);

    out << "# nodes=" << t.n << " edges=" << t.m << " target=" << (t.kind == TargetKind::Node ? "node" : "edge")
        << " directed=" << (t.directed ? 1 : 0) << " drivers=" << (has_drivers ? (use_mit ? "mit" : "ect") : "none")
        << " denominator=" << (opt.fixed_denominator ? "fixed" : "alive") << '\n';
    out << "i,delta,n_L,n_NCC,n_D,cnp_exact,cnp_sq" << (has_rank ? ",r_D" : "") << '\n';
    auto cell = [&](bool present, double value) { return present ? fmt9(value) : std::string(); };
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        if (i % stride != 0 && i + 1 != t.samples.size()) continue;
        const auto& s = t.samples[i];
        const double den = denominator(t, s, opt);
        const auto nd = use_mit ? s.drivers_mit : s.drivers_ect;
        out << i << ',' << fmt9(t.delta(i)) << ','
            << cell(s.lcc.has_value(), format_ratio(static_cast<double>(s.lcc.value_or(0)), n)) << ','
            << cell(s.ncc.has_value(), format_ratio(static_cast<double>(s.ncc.value_or(0)), n)) << ','
            << cell(nd.has_value(), static_cast<double>(nd.value_or(0)) / den) << ','
            << cell(s.cnp_exact.has_value(),
                    format_ratio(static_cast<double>(s.cnp_exact.value_or(0)), n * (n - 1.0) / 2.0))
            << ',' << cell(s.cnp_sq.has_value(), format_ratio(static_cast<double>(s.cnp_sq.value_or(0)), n * n));
        if (has_rank) out << ',' << cell(s.rank_a.has_value(), static_cast<double>(s.rank_a.value_or(0)) / den);
        out << '\n';
    }
}

AttackTrace read_trace_csv(std::istream& in) {
    AttackTrace t;
    std::string line;
    std::size_t line_no = 0;
    std::string drivers = "none", denom = "alive";
    bool have_meta = false, have_header = false, has_rank = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string kv;
            while (ss >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                try {
                    if (key == "nodes") t.n = std::stoull(val);
                    else if (key == "edges") t.m = std::stoull(val);
                    else if (key == "target") t.kind = val == "edge" ? TargetKind::Edge : TargetKind::Node;
                    else if (key == "directed") t.directed = val == "1";
                    else if (key == "drivers") drivers = val;
                    else if (key == "denominator") denom = val;
                } catch (const std::exception&) {
                    throw ParseError("bad trace metadata value '" + kv + "'", line_no);
                }
            }
            have_meta = true;
            continue;
        }
        if (!have_header) {
            if (line.rfind("i,delta,n_L,n_NCC,n_D,cnp_exact,cnp_sq", 0) != 0) throw ParseError("missing trace header", line_no);
            has_rank = line.find(",r_D") != std::string::npos;
            have_header = true;
            continue;
        }
        if (!have_meta) throw ParseError("trace has no '# nodes=...' metadata line", line_no);
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cells.push_back(c);
        if (line.back() == ',') cells.emplace_back();
        if (cells.size() != (has_rank ? 8u : 7u)) throw ParseError("wrong number of trace columns", line_no);
        FunctionalSample s;
        try {
            s.step = std::stoull(cells[0]);
        } catch (const std::exception&) {
            throw ParseError("bad step index '" + cells[0] + "'", line_no);
        }
        if (s.step != t.samples.size()) throw ParseError("trace rows must be consecutive (written with stride 1)", line_no);
        const std::size_t removed = t.kind == TargetKind::Node ? s.step : 0;
        s.alive = t.n >= removed ? t.n - removed : 0;
        const double n = static_cast<double>(t.n);
        const double den = denom == "fixed" ? std::max(n, 1.0) : static_cast<double>(std::max<std::size_t>(s.alive, 1));
        auto num = [&](std::size_t col, double scale) -> std::optional<std::uint64_t> {
            if (cells[col].empty()) return std::nullopt;
            try {
                return static_cast<std::uint64_t>(std::llround(std::stod(cells[col]) * scale));
            } catch (const std::exception&) {
                throw ParseError("bad number '" + cells[col] + "'", line_no);
            }
        };
        if (auto v = num(2, n)) s.lcc = *v;
        if (auto v = num(3, n)) s.ncc = *v;
        if (auto v = num(4, den)) {
            if (drivers == "mit") s.drivers_mit = *v;
            else s.drivers_ect = *v;
        }
        s.cnp_exact = num(5, n * (n - 1.0) / 2.0);
        s.cnp_sq = num(6, n * n);
        if (has_rank) {
            if (auto v = num(7, den)) s.rank_a = *v;
        }
        t.samples.push_back(s);
    }
    if (!have_header) throw ParseError("missing trace header", line_no);
    return t;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NETROB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace netrob
