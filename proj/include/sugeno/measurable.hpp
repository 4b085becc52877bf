#pragma once

#include <span>
#include <vector>

#include "sugeno/capacity.hpp"

namespace sugeno {

// f: X -> [0,1] on a finite ground set, values[i] = f(i).
class MeasurableFn {
public:
    // Throws BadLength on a size mismatch, Domain on values outside [0,1].
    MeasurableFn(const FiniteSpace& space, std::vector<double> values);

    static MeasurableFn constant(const FiniteSpace& space, double a);
    static MeasurableFn indicator(const FiniteSpace& space, Mask set);
    static MeasurableFn zero(const FiniteSpace& space) { return constant(space, 0.0); }

    const FiniteSpace& space() const noexcept { return space_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    // Pointwise f <= g. Throws SpaceMismatch.
    bool dominated_by(const MeasurableFn& g) const;

    friend bool operator==(const MeasurableFn&, const MeasurableFn&) = default;

private:
    FiniteSpace space_;
    std::vector<double> values_;
};

// {i : f(i) >= t}, exact comparison. Throws Domain for t outside [0,1].
Mask level_set(const MeasurableFn& f, double t);

// {i : f(i) > 0}.
Mask strict_support(const MeasurableFn& f);

// |f - g| pointwise. Throws SpaceMismatch.
MeasurableFn residual(const MeasurableFn& f, const MeasurableFn& g);

// t -> mu({f >= t}); non-increasing in t. Throws SpaceMismatch.
double survival(const Capacity& c, const MeasurableFn& f, double t);

// Sorted, deduplicated values of f.
std::vector<double> distinct_values(const MeasurableFn& f);

}  // namespace sugeno
