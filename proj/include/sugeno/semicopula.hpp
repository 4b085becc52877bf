#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sugeno {

// A binary aggregation S:[0,1]^2 -> [0,1]. The four closed-form kinds are
// exact; Table holds an (n+1)x(n+1) node lattice and interpolates bilinearly.
// Values are immutable after construction, so copies share the grid.
class Semicopula {
public:
    enum class Kind { Min, Product, ProdMax, Lukasiewicz, Table };

    static Semicopula min() { return Semicopula(Kind::Min); }
    static Semicopula product() { return Semicopula(Kind::Product); }
    static Semicopula prod_max() { return Semicopula(Kind::ProdMax); }
    static Semicopula lukasiewicz() { return Semicopula(Kind::Lukasiewicz); }

    // grid[i][j] = S(i/n, j/n); n = grid.size() - 1 >= 1. Throws BadTable on
    // a non-square grid or entries outside [0,1]. Axioms are not checked here.
    static Semicopula table(const std::vector<std::vector<double>>& grid);

    // Lookup by name: "min", "product", "prodmax", "lukasiewicz"
    // (aliases "sugeno", "shilkret", "prod-max", "luk"). Throws BadParams.
    static Semicopula builtin(std::string_view name);

    static const std::array<Semicopula, 4>& builtins();

    Kind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept;
    bool is_builtin() const noexcept { return kind_ != Kind::Table; }

    // Table only; 0 for builtins.
    std::size_t resolution() const noexcept { return resolution_; }
    double node(std::size_t i, std::size_t j) const;

    // Throws Domain if a or b lies outside [0,1].
    double operator()(double a, double b) const;

private:
    explicit Semicopula(Kind kind) : kind_(kind) {}

    double interpolate(double a, double b) const;

    Kind kind_;
    std::size_t resolution_ = 0;
    std::shared_ptr<const std::vector<double>> grid_;  // row-major, (n+1)^2
};

inline double eval(const Semicopula& s, double a, double b) { return s(a, b); }

enum class AxiomViolation {
    MonotoneFirst,     // S(x_i, y) > S(x_{i+1}, y)
    MonotoneSecond,    // S(x, y_j) > S(x, y_{j+1})
    NeutralRight,      // S(x, 1) != x
    NeutralLeft,       // S(1, y) != y
    AboveMin,          // S(x, y) > x ^ y
    ZeroAnnihilation,  // S(x, 0) != 0 or S(0, y) != 0
};

std::string_view to_string(AxiomViolation v);

struct AxiomWitness {
    AxiomViolation kind;
    double a;
    double b;
    double value;     // S at (a, b)
    double expected;  // bound or target the value was compared with
};

struct SemicopulaValidation {
    std::size_t resolution = 0;
    std::size_t points_checked = 0;
    std::size_t violation_count = 0;
    std::array<std::size_t, 6> counts{};  // indexed by AxiomViolation
    std::vector<AxiomWitness> witnesses;  // first max_witnesses violations
    bool pass() const noexcept { return violation_count == 0; }
};

inline constexpr double kAxiomTolerance = 1e-12;
inline constexpr std::size_t kMaxWitnesses = 64;

// Lattice scan of the semicopula axioms and their consequences on the
// (resolution+1)^2 uniform grid. Requires resolution >= 2 (BadParams).
SemicopulaValidation validate_semicopula(const Semicopula& s, std::size_t resolution);

}  // namespace sugeno
