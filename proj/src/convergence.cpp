#include "sugeno/convergence.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace sugeno {

FnSequence::FnSequence(FiniteSpace space, std::vector<MeasurableFn> terms, MeasurableFn limit,
                       std::string provenance)
    : space_(space), terms_(std::move(terms)), limit_(std::move(limit)),
      provenance_(std::move(provenance)) {
    if (terms_.empty()) throw Error(ErrorCode::BadParams, "sequence needs at least one term");
    if (!(limit_.space() == space_)) {
        throw Error(ErrorCode::SpaceMismatch, "sequence limit lives on another space");
    }
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (!(terms_[k].space() == space_)) {
            throw Error(ErrorCode::SpaceMismatch,
                        "sequence term " + std::to_string(k + 1) + " lives on another space");
        }
    }
}

MeasurableFn FnSequence::residual_at(std::size_t n) const {
    if (n < 1 || n > terms_.size()) throw Error(ErrorCode::Domain, "term index out of range");
    return residual(terms_[n - 1], limit_);
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::InCapacity: return "in-capacity";
        case Mode::Strict: return "strict";
        case Mode::InMean: return "in-mean";
    }
    return "unknown";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::vector<double> default_t_grid() {
    constexpr std::size_t points = 100;
    std::vector<double> grid(points);
    for (std::size_t k = 0; k < points; ++k) {
        const double exponent = -2.0 + 2.0 * static_cast<double>(k) / static_cast<double>(points - 1);
        grid[k] = k + 1 == points ? 1.0 : std::pow(10.0, exponent);
    }
    return grid;
}

std::size_t default_tail_start(std::size_t horizon) { return std::max<std::size_t>(1, (horizon + 1) / 2); }

namespace {

void require_tail(std::size_t tail_start, std::size_t horizon) {
    if (tail_start < 1 || tail_start > horizon) {
        throw Error(ErrorCode::BadParams, "tail_start must be in [1, " + std::to_string(horizon) +
                                              "], got " + std::to_string(tail_start));
    }
}

void require_same_space(const Capacity& c, const FnSequence& seq) {
    if (!(c.space() == seq.space())) {
        throw Error(ErrorCode::SpaceMismatch, "capacity and sequence on different spaces");
    }
}

struct TailStats {
    double sup = 0.0;
    std::size_t argmax = 0;  // 1-based n
};

TailStats tail_stats(const std::vector<double>& values, std::size_t tail_start) {
    TailStats stats;
    for (std::size_t n = tail_start; n <= values.size(); ++n) {
        if (stats.argmax == 0 || values[n - 1] > stats.sup) {
            stats.sup = values[n - 1];
            stats.argmax = n;
        }
    }
    return stats;
}

ConvergenceReport make_report(Mode mode, std::vector<double> values, double epsilon,
                              std::size_t tail_start) {
    ConvergenceReport r;
    r.mode = mode;
    r.horizon = values.size();
    r.tail_start = tail_start;
    r.epsilon = epsilon;
    const auto stats = tail_stats(values, tail_start);
    r.tail_sup = stats.sup;
    r.tail_argmax = stats.argmax;
    r.verdict = tail_verdict(values, tail_start, epsilon);
    r.terms = std::move(values);
    return r;
}

}  // namespace

Verdict tail_verdict(const std::vector<double>& values, std::size_t tail_start, double epsilon) {
    require_tail(tail_start, values.size());
    const auto stats = tail_stats(values, tail_start);
    if (stats.sup <= epsilon) return Verdict::Pass;
    const std::size_t tail_len = values.size() - tail_start + 1;
    const std::size_t window = std::min(tail_len, std::max<std::size_t>(2, (tail_len + 3) / 4));
    const bool settled = std::all_of(values.end() - static_cast<std::ptrdiff_t>(window), values.end(),
                                     [epsilon](double v) { return v <= epsilon / 10.0; });
    return settled ? Verdict::Inconclusive : Verdict::Fail;
}

ConvergenceReport check_in_capacity(const Capacity& c, const FnSequence& seq,
                                    const std::vector<double>& t_grid, double epsilon,
                                    std::size_t tail_start) {
    require_same_space(c, seq);
    if (t_grid.empty()) throw Error(ErrorCode::BadGrid, "t-grid is empty");
    for (double t : t_grid) {
        if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorCode::BadGrid, "t-grid entries must lie in (0,1]");
    }
    require_tail(tail_start, seq.horizon());

    std::vector<double> grid = t_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const std::size_t horizon = seq.horizon();
    // per_t[k][n-1] = mu({r_n >= grid[k]})
    std::vector<std::vector<double>> per_t(grid.size(), std::vector<double>(horizon));
    for (std::size_t n = 1; n <= horizon; ++n) {
        const auto r = seq.residual_at(n);
        for (std::size_t k = 0; k < grid.size(); ++k) per_t[k][n - 1] = survival(c, r, grid[k]);
    }

    ConvergenceReport report = make_report(Mode::InCapacity, per_t.front(), epsilon, tail_start);
    report.verdict = Verdict::Pass;
    report.thresholds.reserve(grid.size());
    bool any_fail = false;
    bool any_inconclusive = false;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto stats = tail_stats(per_t[k], tail_start);
        const Verdict v = tail_verdict(per_t[k], tail_start, epsilon);
        any_fail |= v == Verdict::Fail;
        any_inconclusive |= v == Verdict::Inconclusive;
        report.thresholds.push_back({grid[k], stats.sup, stats.argmax, v});
        if (stats.sup > report.tail_sup) {
            report.tail_sup = stats.sup;
            report.tail_argmax = stats.argmax;
        }
    }
    report.verdict = any_fail ? Verdict::Fail : any_inconclusive ? Verdict::Inconclusive : Verdict::Pass;
    return report;
}

ConvergenceReport check_strict(const Capacity& c, const FnSequence& seq, double epsilon,
                               std::size_t tail_start) {
    require_same_space(c, seq);
    require_tail(tail_start, seq.horizon());
    std::vector<double> values(seq.horizon());
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
        values[n - 1] = c.measure(strict_support(seq.residual_at(n)));
    }
    return make_report(Mode::Strict, std::move(values), epsilon, tail_start);
}

ConvergenceReport check_in_mean(const Semicopula& s, const Capacity& c, const FnSequence& seq,
                                double epsilon, std::size_t tail_start) {
    require_same_space(c, seq);
    require_tail(tail_start, seq.horizon());
    std::vector<double> values(seq.horizon());
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
        values[n - 1] = integrate(s, c, seq.residual_at(n)).value;
    }
    auto report = make_report(Mode::InMean, std::move(values), epsilon, tail_start);
    report.semicopula = std::string(s.name());
    return report;
}

namespace {

void finish_audit(ImplicationReport& r) {
    const bool implication_broken = r.hypothesis.passed() && !r.conclusion.passed();
    r.consistency_violation = implication_broken || r.termwise_violations > 0;
    r.refutes_converse = r.hypothesis.verdict == Verdict::Fail && r.conclusion.passed();
}

}  // namespace

ImplicationReport theorem1_audit(const Capacity& c, const FnSequence& seq, const CheckParams& params) {
    const std::size_t tail = params.resolved_tail_start(seq.horizon());
    const auto grid = params.resolved_t_grid();
    ImplicationReport r;
    r.theorem = 1;
    r.hypothesis = check_strict(c, seq, params.epsilon, tail);
    r.conclusion = check_in_capacity(c, seq, grid, params.epsilon, tail);
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
        const auto res = seq.residual_at(n);
        const double support = c.measure(strict_support(res));
        for (double t : grid) {
            if (survival(c, res, t) > support) ++r.termwise_violations;
        }
    }
    finish_audit(r);
    return r;
}

ImplicationReport theorem2_audit(const Semicopula& s, const Capacity& c, const FnSequence& seq,
                                 const CheckParams& params) {
    const std::size_t tail = params.resolved_tail_start(seq.horizon());
    const auto grid = params.resolved_t_grid();
    ImplicationReport r;
    r.theorem = 2;
    r.hypothesis = check_strict(c, seq, params.epsilon, tail);
    r.conclusion = check_in_mean(s, c, seq, params.epsilon, tail);
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
        const auto res = seq.residual_at(n);
        const double mean = r.conclusion.terms[n - 1];
        const double dominant = sugeno_integral(c, res).value;
        if (mean > dominant) ++r.termwise_violations;
        for (double t0 : grid) {
            if (dominant > std::max(t0, survival(c, res, t0))) ++r.termwise_violations;
        }
    }
    finish_audit(r);
    return r;
}

Rate Rate::parse(std::string_view text) {
    if (text == "1/n") {
        return {"1/n", [](std::size_t n) { return 1.0 / static_cast<double>(n); }};
    }
    if (text == "1/2^n") {
        return {"1/2^n", [](std::size_t n) { return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(n, 100000))); }};
    }
    if (text == "1/log(n+2)") {
        return {"1/log(n+2)", [](std::size_t n) { return 1.0 / std::log(static_cast<double>(n) + 2.0); }};
    }
    double a = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, a);
    if (ec == std::errc() && ptr == last && !text.empty()) {
        return {std::string(text), [a](std::size_t) { return a; }, true};
    }
    throw Error(ErrorCode::BadRate, "unknown rate '" + std::string(text) +
                                        "' (expected 1/n, 1/2^n, 1/log(n+2) or a number)");
}

FnSequence counterexample_constant(const FiniteSpace& space, const Rate& rate, std::size_t horizon) {
    if (horizon == 0) throw Error(ErrorCode::BadParams, "horizon must be positive");
    if (rate.constant) {
        throw Error(ErrorCode::BadRate, "rate '" + rate.name + "' is constant and does not vanish");
    }
    std::vector<MeasurableFn> terms;
    terms.reserve(horizon);
    double previous = 1.0;
    for (std::size_t n = 1; n <= horizon; ++n) {
        const double a = rate.value(n);
        if (!(a > 0.0 && a <= 1.0)) {
            throw Error(ErrorCode::BadRate, "rate '" + rate.name + "' leaves (0,1] at n=" + std::to_string(n));
        }
        if (a > previous) {
            throw Error(ErrorCode::BadRate, "rate '" + rate.name + "' increases at n=" + std::to_string(n));
        }
        previous = a;
        terms.push_back(MeasurableFn::constant(space, a));
    }
    if (horizon >= 2 && !(terms.back()[0] < terms.front()[0])) {
        throw Error(ErrorCode::BadRate, "rate '" + rate.name + "' does not decrease over the horizon");
    }
    return FnSequence(space, std::move(terms), MeasurableFn::zero(space), "constant a_n = " + rate.name);
}

FnSequence random_strictly_convergent(const Capacity& c, std::size_t horizon, std::size_t tail_start,
                                      std::mt19937_64& rng) {
    if (horizon == 0) throw Error(ErrorCode::BadParams, "horizon must be positive");
    require_tail(tail_start, horizon);
    const FiniteSpace& space = c.space();
    const std::size_t size = space.size();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);

    std::vector<double> limit(size);
    const bool lattice = coin(rng);
    for (double& v : limit) {
        v = lattice ? static_cast<double>(std::uniform_int_distribution<int>(0, 8)(rng)) / 8.0 : unit(rng);
    }

    std::vector<Mask> null_sets;
    for (std::size_t a = 0; a < space.subset_count(); ++a) {
        if (c.measure(static_cast<Mask>(a)) == 0.0) null_sets.push_back(static_cast<Mask>(a));
    }
    const Mask null_set = null_sets[std::uniform_int_distribution<std::size_t>(0, null_sets.size() - 1)(rng)];
    const Mask start = null_set | static_cast<Mask>(std::uniform_int_distribution<std::uint64_t>(0, space.full())(rng));
    const std::size_t settle = std::uniform_int_distribution<std::size_t>(1, tail_start)(rng);

    std::vector<MeasurableFn> terms;
    terms.reserve(horizon);
    Mask support = start;
    for (std::size_t n = 1; n <= horizon; ++n) {
        if (n >= settle) support = null_set;
        std::vector<double> v = limit;
        for (std::size_t i = 0; i < size; ++i) {
            if (!((support >> i) & 1U)) continue;
            const double room = std::max(limit[i], 1.0 - limit[i]);
            const double r = room * (0.01 + 0.99 * unit(rng));
            v[i] = limit[i] + r <= 1.0 ? limit[i] + r : std::max(limit[i] - r, 0.0);
        }
        terms.emplace_back(space, std::move(v));
        // Peel one non-null point with probability 1/2.
        const Mask peelable = support & ~null_set;
        if (peelable != 0 && coin(rng)) {
            const int count = std::popcount(peelable);
            int pick = std::uniform_int_distribution<int>(0, count - 1)(rng);
            for (std::size_t i = 0; i < size; ++i) {
                if ((peelable >> i) & 1U) {
                    if (pick-- == 0) {
                        support &= ~(Mask{1} << i);
                        break;
                    }
                }
            }
        }
    }
    return FnSequence(space, std::move(terms), MeasurableFn(space, std::move(limit)),
                      "random strictly convergent, settles on null mask " + std::to_string(null_set) +
                          " at n=" + std::to_string(settle));
}

}  // namespace sugeno
