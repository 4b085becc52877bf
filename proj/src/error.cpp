#include "sugeno/error.hpp"

#include <sstream>

namespace sugeno {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Domain: return "Domain";
        case ErrorCode::SpaceMismatch: return "SpaceMismatch";
        case ErrorCode::BadLength: return "BadLength";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NotMonotone: return "NotMonotone";
        case ErrorCode::MaxNotOne: return "MaxNotOne";
        case ErrorCode::BadWeights: return "BadWeights";
        case ErrorCode::BadDistortion: return "BadDistortion";
        case ErrorCode::BadTable: return "BadTable";
        case ErrorCode::BadGrid: return "BadGrid";
        case ErrorCode::BadRate: return "BadRate";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::BadInstance: return "BadInstance";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Usage: return "Usage";
    }
    return "Unknown";
}

void require_unit(double x, std::string_view what) {
    if (!in_unit(x)) {
        std::ostringstream os;
        os.precision(17);
        os << what << " must lie in [0,1], got " << x;
        throw Error(ErrorCode::Domain, os.str());
    }
}

}  // namespace sugeno
