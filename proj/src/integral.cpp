#include "sugeno/integral.hpp"

#include <algorithm>

namespace sugeno {

namespace {

void require_same_space(const Capacity& c, const MeasurableFn& f) {
    if (!(c.space() == f.space())) {
        throw Error(ErrorCode::SpaceMismatch, "capacity and function on different spaces");
    }
}

}  // namespace

IntegralResult integrate(const Semicopula& s, const Capacity& c, const MeasurableFn& f) {
    require_same_space(c, f);
    const auto candidates = distinct_values(f);
    IntegralResult best;
    bool first = true;
    for (double v : candidates) {
        const double value = s(v, c.measure(level_set(f, v)));
        if (first || value > best.value) {
            best.value = value;
            best.argmax_threshold = v;
            first = false;
        }
    }
    best.candidates_inspected = candidates.size();
    return best;
}

double integrate_grid_oracle(const Semicopula& s, const Capacity& c, const MeasurableFn& f,
                             std::size_t grid_points) {
    if (grid_points < 2) throw Error(ErrorCode::BadParams, "grid oracle needs at least 2 points");
    require_same_space(c, f);
    const double last = static_cast<double>(grid_points - 1);
    double best = 0.0;
    for (std::size_t k = 0; k < grid_points; ++k) {
        const double t = k + 1 == grid_points ? 1.0 : static_cast<double>(k) / last;
        best = std::max(best, s(t, c.measure(level_set(f, t))));
    }
    return best;
}

}  // namespace sugeno
