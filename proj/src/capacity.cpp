#include "sugeno/capacity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sugeno {

FiniteSpace::FiniteSpace(std::size_t n) : n_(n) {
    if (n < 1 || n > kMaxSpaceSize) {
        throw Error(ErrorCode::BadParams, "space size must be in [1," +
                                              std::to_string(kMaxSpaceSize) + "], got " +
                                              std::to_string(n));
    }
}

std::string CapacityViolation::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
        case ErrorCode::BadLength:
            os << "table has " << value << " entries, expected " << bound;
            break;
        case ErrorCode::OutOfRange:
            os << "mu(" << set << ") = " << value << " outside [0,1]";
            break;
        case ErrorCode::NotNormalized:
            os << "mu(" << set << ") = " << value << ", expected " << bound;
            break;
        case ErrorCode::NotMonotone:
            os << "mu(" << set << ") = " << value << " > mu(" << (set | (Mask{1} << point))
               << ") = " << bound << " after adding point " << point;
            break;
        default:
            os << to_string(kind);
    }
    return os.str();
}

CapacityValidation validate_capacity_table(const FiniteSpace& space, std::span<const double> values) {
    CapacityValidation report;
    auto record = [&report](CapacityViolation v) {
        ++report.violation_count;
        if (report.violations.size() < CapacityValidation::kMaxViolations) {
            report.violations.push_back(v);
        }
    };

    const std::size_t count = space.subset_count();
    if (values.size() != count) {
        record({ErrorCode::BadLength, 0, -1, static_cast<double>(values.size()),
                static_cast<double>(count)});
        return report;
    }
    for (std::size_t a = 0; a < count; ++a) {
        if (!in_unit(values[a])) {
            record({ErrorCode::OutOfRange, static_cast<Mask>(a), -1, values[a], 0.0});
        }
    }
    if (values[0] != 0.0) record({ErrorCode::NotNormalized, 0, -1, values[0], 0.0});
    const Mask full = space.full();
    if (values[full] != 1.0) record({ErrorCode::NotNormalized, full, -1, values[full], 1.0});

    const std::size_t n = space.size();
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            const Mask bit = Mask{1} << i;
            if (a & bit) continue;
            const double lo = values[a];
            const double hi = values[a | bit];
            if (lo > hi) {
                record({ErrorCode::NotMonotone, static_cast<Mask>(a), static_cast<int>(i), lo, hi});
            }
        }
    }
    return report;
}

Capacity Capacity::from_table(const FiniteSpace& space, std::vector<double> values) {
    auto report = validate_capacity_table(space, values);
    if (!report.valid()) {
        const auto& first = report.violations.front();
        const ErrorCode code = first.kind;
        const std::string message =
            std::string(to_string(code)) + ": " + first.describe() +
            (report.violation_count > 1
                 ? " (+" + std::to_string(report.violation_count - 1) + " more)"
                 : std::string());
        throw CapacityError(code, message, std::move(report));
    }
    return Capacity(space, std::make_shared<const std::vector<double>>(std::move(values)));
}

namespace {

void require_length(const FiniteSpace& space, std::size_t got, const char* what) {
    if (got != space.size()) {
        throw Error(ErrorCode::BadLength, std::string(what) + " has " + std::to_string(got) +
                                              " entries, space has " +
                                              std::to_string(space.size()) + " points");
    }
}

}  // namespace

Capacity Capacity::from_possibility(const FiniteSpace& space, std::span<const double> weights) {
    require_length(space, weights.size(), "possibility weights");
    for (double w : weights) {
        if (!in_unit(w)) throw Error(ErrorCode::BadWeights, "possibility weight outside [0,1]");
    }
    if (*std::max_element(weights.begin(), weights.end()) != 1.0) {
        throw Error(ErrorCode::MaxNotOne, "possibility weights must attain 1");
    }
    std::vector<double> table(space.subset_count(), 0.0);
    for (std::size_t a = 1; a < table.size(); ++a) {
        const auto low = static_cast<std::size_t>(std::countr_zero(static_cast<Mask>(a)));
        table[a] = std::max(table[a & (a - 1)], weights[low]);
    }
    return from_table(space, std::move(table));
}

Capacity Capacity::from_additive(const FiniteSpace& space, std::span<const double> weights) {
    require_length(space, weights.size(), "additive weights");
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw Error(ErrorCode::BadWeights, "additive weights must be finite and non-negative");
        }
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(sum > 0.0)) throw Error(ErrorCode::BadWeights, "additive weights sum to zero");
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os.precision(17);
        os << "additive weights sum to " << sum << ", expected 1 within 1e-9";
        throw Error(ErrorCode::BadWeights, os.str());
    }
    std::vector<double> w(weights.begin(), weights.end());
    for (double& x : w) x /= sum;

    // Each entry extends its predecessor by one non-negative term, so the
    // rounded table stays monotone; clamping to 1 preserves that.
    std::vector<double> table(space.subset_count(), 0.0);
    for (std::size_t a = 1; a < table.size(); ++a) {
        const auto low = static_cast<std::size_t>(std::countr_zero(static_cast<Mask>(a)));
        table[a] = table[a & (a - 1)] + w[low];
    }
    for (double& x : table) x = std::min(x, 1.0);
    table[space.full()] = 1.0;
    return from_table(space, std::move(table));
}

double interpolate_samples(std::span<const double> samples, double t) {
    const std::size_t last = samples.size() - 1;
    if (t <= 0.0) return samples.front();
    if (t >= 1.0) return samples.back();
    const double scaled = t * static_cast<double>(last);
    auto k = static_cast<std::size_t>(std::floor(scaled));
    if (k >= last) k = last - 1;
    const double frac = scaled - static_cast<double>(k);
    if (frac == 0.0) return samples[k];
    return (1.0 - frac) * samples[k] + frac * samples[k + 1];
}

Capacity Capacity::from_distortion(const Capacity& base, std::span<const double> g) {
    if (g.size() < 2) throw Error(ErrorCode::BadDistortion, "distortion needs at least 2 samples");
    if (g.front() != 0.0 || g.back() != 1.0) {
        throw Error(ErrorCode::BadDistortion, "distortion must satisfy g(0)=0 and g(1)=1");
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!in_unit(g[k])) throw Error(ErrorCode::BadDistortion, "distortion sample outside [0,1]");
        if (k > 0 && g[k] < g[k - 1]) {
            throw Error(ErrorCode::BadDistortion,
                        "distortion samples decrease at index " + std::to_string(k));
        }
    }
    std::vector<double> table(base.table().begin(), base.table().end());
    for (double& x : table) x = std::clamp(interpolate_samples(g, x), 0.0, 1.0);
    return from_table(base.space(), std::move(table));
}

Capacity Capacity::uniform_additive(const FiniteSpace& space) {
    std::vector<double> w(space.size(), 1.0 / static_cast<double>(space.size()));
    return from_additive(space, w);
}

double Capacity::measure(Mask m) const {
    if (!space_.contains(m)) {
        throw Error(ErrorCode::Domain, "subset mask " + std::to_string(m) +
                                           " has bits beyond space of size " +
                                           std::to_string(space_.size()));
    }
    return (*table_)[m];
}

bool Capacity::dominated_by(const Capacity& other) const {
    if (!(space_ == other.space_)) throw Error(ErrorCode::SpaceMismatch, "capacities on different spaces");
    const auto a = table();
    const auto b = other.table();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

namespace {

Capacity random_envelope(const FiniteSpace& space, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t count = space.subset_count();
    std::vector<double> env(count);
    for (double& x : env) x = unit(rng);
    env[0] = 0.0;
    for (std::size_t a = 1; a < count; ++a) {
        for (std::size_t i = 0; i < space.size(); ++i) {
            const std::size_t bit = std::size_t{1} << i;
            if (a & bit) env[a] = std::max(env[a], env[a ^ bit]);
        }
    }
    env[space.full()] = 1.0;
    return Capacity::from_table(space, std::move(env));
}

std::vector<double> sparse_weights(const FiniteSpace& space, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::bernoulli_distribution zero(0.3);
    std::vector<double> w(space.size());
    for (double& x : w) x = zero(rng) ? 0.0 : unit(rng);
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    w[pick(rng)] = 1.0;
    return w;
}

}  // namespace

Capacity random_capacity(const FiniteSpace& space, std::mt19937_64& rng, CapacityFamily family) {
    if (family == CapacityFamily::Mixed) {
        std::uniform_int_distribution<int> pick(0, 2);
        family = static_cast<CapacityFamily>(pick(rng));
    }
    switch (family) {
        case CapacityFamily::Possibility:
            return Capacity::from_possibility(space, sparse_weights(space, rng));
        case CapacityFamily::Additive: {
            auto w = sparse_weights(space, rng);
            const double sum = std::accumulate(w.begin(), w.end(), 0.0);
            for (double& x : w) x /= sum;
            return Capacity::from_additive(space, w);
        }
        default:
            return random_envelope(space, rng);
    }
}

}  // namespace sugeno
