#pragma once

#include <cstddef>

#include "sugeno/capacity.hpp"
#include "sugeno/measurable.hpp"
#include "sugeno/semicopula.hpp"

namespace sugeno {

struct IntegralResult {
    double value = 0.0;
    double argmax_threshold = 0.0;  // smallest candidate attaining value
    std::size_t candidates_inspected = 0;
};

// Generalized (seminormed) Sugeno integral
//
//     I_S(mu, f) = sup_{t in [0,1]} S(t, mu({f >= t}))
//
// evaluated exactly on a finite space. Let v_1 < ... < v_k be the distinct
// values of f. On [0, v_1] the level set is X, on (v_i, v_{i+1}] it is
// {f >= v_{i+1}}, and above v_k it is empty. S is non-decreasing in its
// first argument, so the sup over each piece is attained at its right
// endpoint, and the empty piece contributes S(t, 0) = 0. Hence
//
//     I_S(mu, f) = max_i S(v_i, mu({f >= v_i})).
//
// Candidates are scanned in ascending order with exact comparisons.
// Throws SpaceMismatch.
IntegralResult integrate(const Semicopula& s, const Capacity& c, const MeasurableFn& f);

// Direct transcription of the sup over t = k/(grid_points-1), k = 0..grid_points-1.
// Never exceeds integrate(s, c, f).value. Requires grid_points >= 2 (BadParams).
double integrate_grid_oracle(const Semicopula& s, const Capacity& c, const MeasurableFn& f,
                             std::size_t grid_points);

inline IntegralResult sugeno_integral(const Capacity& c, const MeasurableFn& f) {
    return integrate(Semicopula::min(), c, f);
}

inline IntegralResult shilkret_integral(const Capacity& c, const MeasurableFn& f) {
    return integrate(Semicopula::product(), c, f);
}

}  // namespace sugeno
