#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netrob/attacks.hpp"
#include "netrob/functional.hpp"
#include "netrob/graph.hpp"

namespace netrob {

/// When run_trace stops. Default: every target removed.
struct StopRule {
    std::optional<std::size_t> max_attacks;  // H, truncated attack
    bool at_threshold = false;               // stop once detect_threshold fires
    double p = 0.05;
};

struct AttackTrace {
    TargetKind kind = TargetKind::Node;
    std::size_t n = 0;
    std::size_t m = 0;
    bool directed = false;
    AttackSequence sequence;
    std::vector<FunctionalSample> samples;  // samples[i] after i attacks

    /// Last index of the evaluation range: N-1 for node traces, M for edge traces.
    std::size_t eval_end() const { return kind == TargetKind::Node ? (n == 0 ? 0 : n - 1) : m; }
    bool complete() const { return samples.size() > eval_end(); }
    /// Removal fraction i/N (node) or i/M (edge).
    double delta(std::size_t i) const;
};

AttackTrace run_trace(const Graph& graph, const AttackPlan& plan, const MeasureSet& which,
                      const StopRule& stop = {});

/// Replays a fixed order (used by EXA and for re-evaluation).
AttackTrace run_sequence(const Graph& graph, TargetKind kind, const AttackSequence& order,
                         const MeasureSet& which, std::optional<std::size_t> max_attacks = std::nullopt);

enum class Measure { R1, R2, R1e, R3, R3e, R6, R7, R8, R9, R10, R15, R15n };
enum class Scheme { CD, TD };
enum class DriverEngine { Auto, MIT, ECT };

Measure parse_measure(std::string_view name);  // r1, r2, r1e, r3, ..., r15, r15n
std::string measure_name(Measure m);
/// True for measures where a larger value means a more robust network.
bool higher_is_better(Measure m);

struct EvalOptions {
    DriverEngine drivers = DriverEngine::Auto;  // Auto: MIT when sampled, else ECT
    bool fixed_denominator = false;             // N' = N instead of N - i
    bool allow_truncated = false;               // evaluate a shortened trace over what it has
};

/// Functional fields needed to evaluate `measures`.
MeasureSet required_measures(const std::vector<Measure>& measures, bool directed,
                             DriverEngine drivers = DriverEngine::Auto);

/// Per-step value v(i) whose mean over the range defines the measure.
double step_value(const AttackTrace& trace, Measure m, std::size_t i, const EvalOptions& opt = {});

/// Mean of v(i) over i = 0..K (CD) or 0..T (TD, pass T).
double evaluate(const AttackTrace& trace, Measure m, const EvalOptions& opt = {},
                std::optional<std::size_t> threshold = std::nullopt);

enum class ThresholdMode { NodeDecrease, EdgeStagnation };

struct ThresholdResult {
    std::vector<std::size_t> ncc;  // D(i)
    double p = 0.05;
    std::size_t window = 1;        // c = max(1, floor(pN))
    ThresholdMode mode = ThresholdMode::NodeDecrease;
    std::optional<std::size_t> detected;  // T from successive detection
    std::size_t fallback = 0;             // last maximizer of D
    std::size_t T = 0;                    // detected, else fallback
};

ThresholdResult detect_threshold(const AttackTrace& trace, double p = 0.05);

struct MeasureValue {
    std::optional<double> cd;
    std::optional<double> td;
};

struct RobustnessReport {
    std::map<Measure, MeasureValue> values;
    std::optional<ThresholdResult> threshold;
};

RobustnessReport report(const AttackTrace& trace, const std::vector<Measure>& measures, bool cd, bool td,
                        double p = 0.05, const EvalOptions& opt = {});

struct ExaResult {
    double mean = 0.0;
    double stderr_ = 0.0;  // 0 for exact enumeration
    std::size_t count = 0;
    bool exact = true;
};

/// Mean CD value over all node (or edge) removal orders, or over `samples`
/// random orders when K exceeds kExaMaxExact.
ExaResult exa_measure(const Graph& graph, Measure m, TargetKind kind = TargetKind::Node,
                      std::optional<std::size_t> samples = std::nullopt, std::uint64_t seed = 42,
                      const EvalOptions& opt = {});

/// Robustness of one net for one (plan, measure) cell; EXA plans use exa_measure.
double measure_value(const Graph& graph, const AttackPlan& plan, Measure m, const EvalOptions& opt = {});

struct AveragedReport {
    std::vector<std::vector<double>> values;  // [repeat p][strategy q]
    std::vector<double> strategy_means;
    double r11 = 0.0;
};

/// Repeat p of plan q runs with seed derive_seed(plan.seed, p, q).
AveragedReport averaged(const Graph& graph, const std::vector<AttackPlan>& plans, Measure m,
                        std::size_t repeats, const EvalOptions& opt = {}, unsigned threads = 0);

/// Fractional ranks (1 = most robust); ties share the mean of their positions.
std::vector<double> fractional_ranks(const std::vector<double>& values, bool higher_better);

struct RankRow {
    std::string strategy;
    Measure measure;
    std::vector<double> values;
    std::vector<double> ranks;
};

struct RankTable {
    std::vector<std::string> nets;
    std::vector<RankRow> rows;
};

RankTable rank_table(const std::vector<std::pair<std::string, Graph>>& nets, const std::vector<AttackPlan>& plans,
                     const std::vector<Measure>& measures, const EvalOptions& opt = {}, unsigned threads = 0);

/// Trace CSV: a "# nodes=N edges=M target=node|edge directed=0|1" line, then
/// `i,delta,n_L,n_NCC,n_D,cnp_exact,cnp_sq` (plus `r_D` when ranks were sampled).
void write_trace_csv(std::ostream& out, const AttackTrace& trace, std::size_t stride = 1,
                     const EvalOptions& opt = {});
AttackTrace read_trace_csv(std::istream& in);

/// Thread cap: explicit value, else NETROB_THREADS, else hardware concurrency.
unsigned resolve_threads(unsigned requested = 0);
/// Runs fn(0..count-1) on up to `threads` workers; rethrows the first error.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace netrob
