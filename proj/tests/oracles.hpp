#pragma once

// Reference computations for the test suites. Nothing here calls into the
// library's integration, level-set or validation code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using SetFunction = std::function<double(std::uint32_t)>;
using Binary = std::function<double(double, double)>;

inline double prod_max(double x, double y) { return x * y * (x > y ? x : y); }

inline double uniform_count(std::uint32_t mask, std::size_t n) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k += (mask >> i) & 1U;
    return static_cast<double>(k) / static_cast<double>(n);
}

// Full O(4^n) pairwise check: A subset of B implies mu(A) <= mu(B).
inline bool monotone_pairwise(const std::vector<double>& table) {
    const std::size_t count = table.size();
    for (std::uint32_t a = 0; a < count; ++a) {
        for (std::uint32_t b = 0; b < count; ++b) {
            if ((a & b) == a && table[a] > table[b]) return false;
        }
    }
    return true;
}

// sup over a dense uniform t-grid of S(t, mu({f >= t})), level set built
// by a plain comparison loop.
inline double grid_sup(const Binary& s, const SetFunction& mu, const std::vector<double>& f,
                       std::size_t points) {
    double best = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(points - 1);
        std::uint32_t level = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!(f[i] < t)) level |= 1U << i;
        }
        best = std::max(best, s(t, mu(level)));
    }
    return best;
}

// True when v never increases along its index.
inline bool non_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) return false;
    }
    return true;
}

}  // namespace oracle
