#include "sugeno/semicopula.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sugeno/error.hpp"

namespace sugeno {

Semicopula Semicopula::table(const std::vector<std::vector<double>>& grid) {
    if (grid.size() < 2) {
        throw Error(ErrorCode::BadTable, "semicopula table needs at least a 2x2 grid");
    }
    const std::size_t side = grid.size();
    auto flat = std::make_shared<std::vector<double>>();
    flat->reserve(side * side);
    for (std::size_t i = 0; i < side; ++i) {
        if (grid[i].size() != side) {
            throw Error(ErrorCode::BadTable, "semicopula table row " + std::to_string(i) +
                                                 " has " + std::to_string(grid[i].size()) +
                                                 " entries, expected " + std::to_string(side));
        }
        for (std::size_t j = 0; j < side; ++j) {
            if (!in_unit(grid[i][j])) {
                throw Error(ErrorCode::BadTable, "semicopula table entry [" + std::to_string(i) +
                                                     "][" + std::to_string(j) + "] outside [0,1]");
            }
            flat->push_back(grid[i][j]);
        }
    }
    Semicopula s(Kind::Table);
    s.resolution_ = side - 1;
    s.grid_ = std::move(flat);
    return s;
}

Semicopula Semicopula::builtin(std::string_view name) {
    if (name == "min" || name == "sugeno") return min();
    if (name == "product" || name == "shilkret") return product();
    if (name == "prodmax" || name == "prod-max") return prod_max();
    if (name == "lukasiewicz" || name == "luk") return lukasiewicz();
    throw Error(ErrorCode::BadParams, "unknown semicopula '" + std::string(name) + "'");
}

const std::array<Semicopula, 4>& Semicopula::builtins() {
    static const std::array<Semicopula, 4> all{min(), product(), prod_max(), lukasiewicz()};
    return all;
}

std::string_view Semicopula::name() const noexcept {
    switch (kind_) {
        case Kind::Min: return "min";
        case Kind::Product: return "product";
        case Kind::ProdMax: return "prodmax";
        case Kind::Lukasiewicz: return "lukasiewicz";
        case Kind::Table: return "table";
    }
    return "table";
}

double Semicopula::node(std::size_t i, std::size_t j) const {
    if (kind_ != Kind::Table || i > resolution_ || j > resolution_) {
        throw Error(ErrorCode::Domain, "semicopula node index out of range");
    }
    return (*grid_)[i * (resolution_ + 1) + j];
}

double Semicopula::operator()(double a, double b) const {
    require_unit(a, "semicopula first argument");
    require_unit(b, "semicopula second argument");
    switch (kind_) {
        case Kind::Min:
            return std::min(a, b);
        case Kind::Product:
            return a * b;
        case Kind::ProdMax:
            return a * b * std::max(a, b);
        case Kind::Lukasiewicz:
            // Evaluated as a - (1 - b): exact at the neutral element and
            // never above a ^ b after rounding, unlike a + b - 1.
            if (b == 1.0) return a;
            if (a == 1.0) return b;
            return std::max(a - (1.0 - b), 0.0);
        case Kind::Table:
            return interpolate(a, b);
    }
    return 0.0;
}

namespace {

// Cell index and fractional offset of x*n, snapping to nodes so that lattice
// points of matching resolution read stored values exactly.
std::pair<std::size_t, double> locate(double x, std::size_t n) {
    const double scaled = x * static_cast<double>(n);
    const double nearest = std::round(scaled);
    if (std::abs(scaled - nearest) < 1e-9) {
        const auto k = static_cast<std::size_t>(nearest);
        if (k == n) return {n - 1, 1.0};
        return {k, 0.0};
    }
    auto k = static_cast<std::size_t>(std::floor(scaled));
    if (k >= n) k = n - 1;
    return {k, scaled - static_cast<double>(k)};
}

}  // namespace

double Semicopula::interpolate(double a, double b) const {
    const std::size_t n = resolution_;
    const std::size_t stride = n + 1;
    const auto& g = *grid_;
    const auto [i, fa] = locate(a, n);
    const auto [j, fb] = locate(b, n);
    auto at = [&](std::size_t r, std::size_t c) { return g[r * stride + c]; };
    auto lerp = [](double lo, double hi, double f) {
        if (f == 0.0) return lo;
        if (f == 1.0) return hi;
        return (1.0 - f) * lo + f * hi;
    };
    const double lower = lerp(at(i, j), at(i, j + 1), fb);
    const double upper = lerp(at(i + 1, j), at(i + 1, j + 1), fb);
    return std::clamp(lerp(lower, upper, fa), 0.0, 1.0);
}

std::string_view to_string(AxiomViolation v) {
    switch (v) {
        case AxiomViolation::MonotoneFirst: return "monotone-first";
        case AxiomViolation::MonotoneSecond: return "monotone-second";
        case AxiomViolation::NeutralRight: return "neutral-right";
        case AxiomViolation::NeutralLeft: return "neutral-left";
        case AxiomViolation::AboveMin: return "above-min";
        case AxiomViolation::ZeroAnnihilation: return "zero-annihilation";
    }
    return "unknown";
}

SemicopulaValidation validate_semicopula(const Semicopula& s, std::size_t resolution) {
    if (resolution < 2) {
        throw Error(ErrorCode::BadParams, "check resolution must be at least 2");
    }
    const std::size_t m = resolution;
    const std::size_t side = m + 1;
    auto coord = [m](std::size_t k) {
        return k == m ? 1.0 : static_cast<double>(k) / static_cast<double>(m);
    };

    std::vector<double> values(side * side);
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) {
            values[i * side + j] = s(coord(i), coord(j));
        }
    }
    auto at = [&](std::size_t i, std::size_t j) { return values[i * side + j]; };

    SemicopulaValidation report;
    report.resolution = m;
    report.points_checked = side * side;
    auto record = [&](AxiomViolation kind, double a, double b, double value, double expected) {
        ++report.violation_count;
        ++report.counts[static_cast<std::size_t>(kind)];
        if (report.witnesses.size() < kMaxWitnesses) {
            report.witnesses.push_back({kind, a, b, value, expected});
        }
    };

    constexpr double tol = kAxiomTolerance;
    for (std::size_t i = 0; i < side; ++i) {
        const double x = coord(i);
        for (std::size_t j = 0; j < side; ++j) {
            const double y = coord(j);
            const double v = at(i, j);
            if (i + 1 < side && v > at(i + 1, j) + tol) {
                record(AxiomViolation::MonotoneFirst, x, y, v, at(i + 1, j));
            }
            if (j + 1 < side && v > at(i, j + 1) + tol) {
                record(AxiomViolation::MonotoneSecond, x, y, v, at(i, j + 1));
            }
            if (j == m && std::abs(v - x) > tol) {
                record(AxiomViolation::NeutralRight, x, y, v, x);
            }
            if (i == m && std::abs(v - y) > tol) {
                record(AxiomViolation::NeutralLeft, x, y, v, y);
            }
            if (v > std::min(x, y) + tol) {
                record(AxiomViolation::AboveMin, x, y, v, std::min(x, y));
            }
            if ((i == 0 || j == 0) && std::abs(v) > tol) {
                record(AxiomViolation::ZeroAnnihilation, x, y, v, 0.0);
            }
        }
    }
    return report;
}

}  // namespace sugeno
