#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sugeno {

enum class ErrorCode {
    Domain,
    SpaceMismatch,
    BadLength,
    OutOfRange,
    NotNormalized,
    NotMonotone,
    MaxNotOne,
    BadWeights,
    BadDistortion,
    BadTable,
    BadGrid,
    BadRate,
    BadParams,
    BadInstance,
    Parse,
    Usage,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library. `location` is a JSON-pointer-ish
// path filled in by the instance loader; library code leaves it empty.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string location = {})
        : std::runtime_error(message), code_(code), location_(std::move(location)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& location() const noexcept { return location_; }
    void set_location(std::string location) { location_ = std::move(location); }

private:
    ErrorCode code_;
    std::string location_;
};

// Throws Domain unless 0 <= x <= 1 (NaN fails).
void require_unit(double x, std::string_view what);

inline bool in_unit(double x) noexcept { return x >= 0.0 && x <= 1.0; }

}  // namespace sugeno
