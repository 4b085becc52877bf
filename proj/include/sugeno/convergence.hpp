#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sugeno/capacity.hpp"
#include "sugeno/integral.hpp"
#include "sugeno/measurable.hpp"
#include "sugeno/semicopula.hpp"

namespace sugeno {

// Finite truncation f_1, ..., f_N of a sequence together with a candidate
// limit f. Terms are 1-indexed in reports (n = 1 is terms[0]).
class FnSequence {
public:
    // Throws BadParams on an empty sequence, SpaceMismatch if any term or
    // the limit lives on another space.
    FnSequence(FiniteSpace space, std::vector<MeasurableFn> terms, MeasurableFn limit,
               std::string provenance = {});

    const FiniteSpace& space() const noexcept { return space_; }
    const std::vector<MeasurableFn>& terms() const noexcept { return terms_; }
    const MeasurableFn& limit() const noexcept { return limit_; }
    const std::string& provenance() const noexcept { return provenance_; }
    std::size_t horizon() const noexcept { return terms_.size(); }

    // |f_n - f| for n in [1, horizon].
    MeasurableFn residual_at(std::size_t n) const;

private:
    FiniteSpace space_;
    std::vector<MeasurableFn> terms_;
    MeasurableFn limit_;
    std::string provenance_;
};

enum class Mode { InCapacity, Strict, InMean };
enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Mode m);
std::string_view to_string(Verdict v);

struct ThresholdWitness {
    double t = 0.0;
    double tail_sup = 0.0;           // sup_{n >= tail_start} mu({|f_n - f| >= t})
    std::size_t tail_argmax = 0;     // first n attaining tail_sup
    Verdict verdict = Verdict::Pass;
};

struct ConvergenceReport {
    Mode mode = Mode::Strict;
    Verdict verdict = Verdict::Pass;
    std::size_t horizon = 0;
    std::size_t tail_start = 1;
    double epsilon = 0.0;
    double tail_sup = 0.0;
    std::size_t tail_argmax = 0;
    // Per-n values, n = 1..horizon. Strict: mu({|f_n - f| > 0}). InMean:
    // I_S(mu, |f_n - f|). InCapacity: mu({|f_n - f| >= t_min}).
    std::vector<double> terms;
    // InCapacity only, ascending t.
    std::vector<ThresholdWitness> thresholds;
    // InMean only.
    std::string semicopula;

    bool passed() const noexcept { return verdict == Verdict::Pass; }
};

inline constexpr double kDefaultEpsilon = 1e-9;

// 100 log-spaced points from 1e-2 to 1, ascending.
std::vector<double> default_t_grid();

// ceil(horizon / 2), at least 1.
std::size_t default_tail_start(std::size_t horizon);

// Tail verdict on per-n values: pass iff sup over n >= tail_start is
// <= epsilon. A failing tail whose final quarter (at least two terms) stays
// within epsilon/10 is reported Inconclusive: the sequence has settled but
// tail_start was placed before it did.
Verdict tail_verdict(const std::vector<double>& values, std::size_t tail_start, double epsilon);

// mu({|f_n - f| >= t}) -> 0 for every t in (0,1], checked on t_grid.
// Throws BadGrid for an empty grid or entries outside (0,1]; BadParams for
// tail_start outside [1, horizon]; SpaceMismatch.
ConvergenceReport check_in_capacity(const Capacity& c, const FnSequence& seq,
                                    const std::vector<double>& t_grid, double epsilon,
                                    std::size_t tail_start);

// mu({|f_n - f| > 0}) -> 0.
ConvergenceReport check_strict(const Capacity& c, const FnSequence& seq, double epsilon,
                               std::size_t tail_start);

// I_S(mu, |f_n - f|) -> 0.
ConvergenceReport check_in_mean(const Semicopula& s, const Capacity& c, const FnSequence& seq,
                                double epsilon, std::size_t tail_start);

struct CheckParams {
    double epsilon = kDefaultEpsilon;
    std::optional<std::size_t> tail_start;  // default_tail_start(horizon)
    std::vector<double> t_grid;             // empty: default_t_grid()

    std::size_t resolved_tail_start(std::size_t horizon) const {
        return tail_start.value_or(default_tail_start(horizon));
    }
    std::vector<double> resolved_t_grid() const {
        return t_grid.empty() ? default_t_grid() : t_grid;
    }
};

// Strict convergence is the hypothesis of both implications. The theorems
// are proved, so any inconsistency below is a bug in this library.
struct ImplicationReport {
    int theorem = 1;
    ConvergenceReport hypothesis;  // Strict
    ConvergenceReport conclusion;  // InCapacity (theorem 1) or InMean (theorem 2)
    // Term-wise proof inequalities that failed on this truncation.
    // Theorem 1: mu({r_n >= t}) <= mu({r_n > 0}) for t in the grid.
    // Theorem 2: I_S(mu, r_n) <= Sugeno(mu, r_n) <= max(t0, mu({r_n >= t0}))
    // for t0 in the grid.
    std::size_t termwise_violations = 0;
    // Strict pass without conclusion pass, or any term-wise violation.
    bool consistency_violation = false;
    // Strict fails while the conclusion passes: the converse is refuted
    // on this instance.
    bool refutes_converse = false;
};

ImplicationReport theorem1_audit(const Capacity& c, const FnSequence& seq, const CheckParams& params);
ImplicationReport theorem2_audit(const Semicopula& s, const Capacity& c, const FnSequence& seq,
                                 const CheckParams& params);

// Vanishing positive rate a_n used by the constant counterexample.
struct Rate {
    std::string name;
    std::function<double(std::size_t)> value;  // n >= 1
    bool constant = false;

    // "1/n", "1/2^n", "1/log(n+2)" or a numeric literal (a constant rate,
    // which counterexample_constant rejects). Throws BadRate otherwise.
    static Rate parse(std::string_view text);
};

// f_n = a_n on all of X, limit f = 0. Throws BadRate unless every a_n lies
// in (0,1], the values are non-increasing and actually decrease over the
// horizon; BadParams for horizon 0.
FnSequence counterexample_constant(const FiniteSpace& space, const Rate& rate, std::size_t horizon);

// Random sequence converging strictly in mu by construction: the supports
// of |f_n - f| form a shrinking chain that reaches a mu-null mask at some
// n0 <= tail_start and stays there.
FnSequence random_strictly_convergent(const Capacity& c, std::size_t horizon,
                                      std::size_t tail_start, std::mt19937_64& rng);

}  // namespace sugeno
