#pragma once

#include <string>

namespace rdsim {

enum class SpatialDomain {
    FullLine,            // x in (-inf, inf)
    HalfLineNonNegative, // x in [0, inf)
    HalfLineNonPositive, // x in (-inf, 0]
};

inline bool domain_contains(SpatialDomain d, double x) {
    switch (d) {
    case SpatialDomain::FullLine: return true;
    case SpatialDomain::HalfLineNonNegative: return x >= 0.0;
    case SpatialDomain::HalfLineNonPositive: return x <= 0.0;
    }
    return false;
}

inline std::string to_string(SpatialDomain d) {
    switch (d) {
    case SpatialDomain::FullLine: return "full-line";
    case SpatialDomain::HalfLineNonNegative: return "half-line x >= 0";
    case SpatialDomain::HalfLineNonPositive: return "half-line x <= 0";
    }
    return "?";
}

} // namespace rdsim
