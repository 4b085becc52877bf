#include "sugeno/measurable.hpp"

#include <algorithm>
#include <cmath>

namespace sugeno {

MeasurableFn::MeasurableFn(const FiniteSpace& space, std::vector<double> values)
    : space_(space), values_(std::move(values)) {
    if (values_.size() != space_.size()) {
        throw Error(ErrorCode::BadLength, "function has " + std::to_string(values_.size()) +
                                              " values, space has " +
                                              std::to_string(space_.size()) + " points");
    }
    for (double v : values_) require_unit(v, "function value");
}

MeasurableFn MeasurableFn::constant(const FiniteSpace& space, double a) {
    return MeasurableFn(space, std::vector<double>(space.size(), a));
}

MeasurableFn MeasurableFn::indicator(const FiniteSpace& space, Mask set) {
    if (!space.contains(set)) throw Error(ErrorCode::Domain, "indicator mask exceeds space");
    std::vector<double> v(space.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (set >> i) & 1U ? 1.0 : 0.0;
    return MeasurableFn(space, std::move(v));
}

bool MeasurableFn::dominated_by(const MeasurableFn& g) const {
    if (!(space_ == g.space_)) throw Error(ErrorCode::SpaceMismatch, "functions on different spaces");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > g.values_[i]) return false;
    }
    return true;
}

Mask level_set(const MeasurableFn& f, double t) {
    require_unit(t, "level-set threshold");
    Mask m = 0;
    const auto v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= t) m |= Mask{1} << i;
    }
    return m;
}

Mask strict_support(const MeasurableFn& f) {
    Mask m = 0;
    const auto v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0.0) m |= Mask{1} << i;
    }
    return m;
}

MeasurableFn residual(const MeasurableFn& f, const MeasurableFn& g) {
    if (!(f.space() == g.space())) {
        throw Error(ErrorCode::SpaceMismatch, "residual of functions on different spaces");
    }
    std::vector<double> out(f.space().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(f[i] - g[i]);
    return MeasurableFn(f.space(), std::move(out));
}

double survival(const Capacity& c, const MeasurableFn& f, double t) {
    if (!(c.space() == f.space())) {
        throw Error(ErrorCode::SpaceMismatch, "capacity and function on different spaces");
    }
    return c.measure(level_set(f, t));
}

std::vector<double> distinct_values(const MeasurableFn& f) {
    std::vector<double> out(f.values().begin(), f.values().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sugeno
