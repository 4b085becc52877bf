#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sugeno/error.hpp"

namespace sugeno {

// Subsets of {0,...,n-1} as bitmasks; bit i set <=> i in the subset.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxSpaceSize = 24;

class FiniteSpace {
public:
    // Throws BadParams unless 1 <= n <= kMaxSpaceSize.
    explicit FiniteSpace(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t subset_count() const noexcept { return std::size_t{1} << n_; }
    Mask full() const noexcept { return static_cast<Mask>(subset_count() - 1); }
    bool contains(Mask m) const noexcept { return (m & ~full()) == 0; }

    friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

private:
    std::size_t n_;
};

struct CapacityViolation {
    ErrorCode kind;       // NotNormalized, NotMonotone, OutOfRange or BadLength
    Mask set = 0;         // offending subset A
    int point = -1;       // for NotMonotone: the i with mu(A) > mu(A u {i})
    double value = 0.0;   // mu(A)
    double bound = 0.0;   // required value, or mu(A u {i})

    std::string describe() const;
};

struct CapacityValidation {
    std::size_t violation_count = 0;
    std::vector<CapacityViolation> violations;  // capped at kMaxViolations
    bool valid() const noexcept { return violation_count == 0; }

    static constexpr std::size_t kMaxViolations = 64;
};

// Boundary conditions plus the single-element increment scan
// mu(A) <= mu(A u {i}) for every A and i not in A. O(n 2^n).
CapacityValidation validate_capacity_table(const FiniteSpace& space, std::span<const double> values);

class CapacityError : public Error {
public:
    CapacityError(ErrorCode code, const std::string& message, CapacityValidation validation)
        : Error(code, message), validation_(std::move(validation)) {}

    const CapacityValidation& validation() const noexcept { return validation_; }

private:
    CapacityValidation validation_;
};

// Normalized monotone set function on the powerset of a FiniteSpace, stored
// as a full 2^n table. Immutable; copies share storage.
class Capacity {
public:
    // Throws CapacityError carrying every violation found (first code wins).
    static Capacity from_table(const FiniteSpace& space, std::vector<double> values);

    // mu(A) = max over A of weights; weights in [0,1] with maximum exactly 1.
    static Capacity from_possibility(const FiniteSpace& space, std::span<const double> weights);

    // mu(A) = sum over A of weights; weights >= 0, sum within 1e-9 of 1,
    // renormalized before use.
    static Capacity from_additive(const FiniteSpace& space, std::span<const double> weights);

    // mu'(A) = g(mu(A)); g sampled uniformly on [0,1] (g[0]=0, g[last]=1,
    // non-decreasing), linearly interpolated between samples.
    static Capacity from_distortion(const Capacity& base, std::span<const double> g);

    static Capacity uniform_additive(const FiniteSpace& space);

    const FiniteSpace& space() const noexcept { return space_; }
    std::span<const double> table() const noexcept { return *table_; }

    // Throws Domain if m has bits beyond the space.
    double measure(Mask m) const;
    double operator()(Mask m) const { return measure(m); }

    // this(A) <= other(A) for every A. Throws SpaceMismatch.
    bool dominated_by(const Capacity& other) const;

private:
    Capacity(FiniteSpace space, std::shared_ptr<const std::vector<double>> table)
        : space_(space), table_(std::move(table)) {}

    FiniteSpace space_;
    std::shared_ptr<const std::vector<double>> table_;
};

// Linear interpolation of a uniformly sampled function on [0,1]; exact at
// the samples and the endpoints.
double interpolate_samples(std::span<const double> samples, double t);

enum class CapacityFamily {
    Envelope,     // i.i.d. uniforms per subset, monotone envelope max_{B subset A}
    Possibility,  // random weights, one forced to 1, some zeros
    Additive,     // random weights, some zeros (non-trivial null sets)
    Mixed,        // one of the above, chosen uniformly
};

// Random capacity generator for property tests. The envelope family sets
// mu(empty)=0 and mu(X)=1 after taking the envelope; no rejection sampling.
Capacity random_capacity(const FiniteSpace& space, std::mt19937_64& rng,
                         CapacityFamily family = CapacityFamily::Envelope);

}  // namespace sugeno
