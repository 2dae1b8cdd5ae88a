#pragma once

#include <cmath>

#include "rdsim/errors.hpp"

namespace rdsim {

// Closed forms are evaluated in extended precision so that the
// difference-quotient oracles built on top of them keep enough significand
// after cancellation.  Public results are reported as double.
using hp = long double;

// Exponent pair (alpha, mu) of the similarity form
//     W(x,t) = t^mu y(z),  z = x / t^alpha.
// Requiring every term of W_t = (D W_x)_x + f to carry the same power of t
// fixes the remaining exponents: D = t^nu rho(z) with nu = 2*alpha - 1 and
// f = t^lambda sigma(z) with lambda = mu - 1.
struct ScalingExponents {
    double alpha = 0.0;
    double mu = 0.0;

    double nu() const { return 2.0 * alpha - 1.0; }
    double lambda() const { return mu - 1.0; }

    // Total number N(t) = integral of W dx scales as t^(alpha+mu); it is
    // constant exactly when mu == -alpha.  Exact comparison is intended:
    // conserving catalog systems store mu = -alpha literally.
    bool conserving() const { return mu == -alpha; }
};

inline hp similarity_variable(hp x, hp t, double alpha) {
    if (!(t > 0.0L)) throw DomainError("similarity variable undefined at t <= 0");
    return x / std::pow(t, static_cast<hp>(alpha));
}

// z(x,t) = x / t^alpha and its inverse x(z,t) = z * t^alpha.
struct SimilarityMap {
    ScalingExponents exponents;

    hp z(hp x, hp t) const { return similarity_variable(x, t, exponents.alpha); }

    hp x(hp z, hp t) const {
        if (!(t > 0.0L)) throw DomainError("similarity variable undefined at t <= 0");
        return z * std::pow(t, static_cast<hp>(exponents.alpha));
    }
};

} // namespace rdsim
