#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rdsim/numerics.hpp"
#include "rdsim/quadrature.hpp"
#include "rdsim/system.hpp"

namespace rdsim {

struct ConservationReport {
    std::vector<double> times;
    std::vector<double> N_values;
    double fitted_exponent = 0.0;
    double expected_exponent = 0.0; // alpha + mu
    double identity_lhs = 0.0;
    double identity_rhs = 0.0;
    double defect = 0.0;
};

// Spatial truncation [a, b] for total-number integrals at time t.
struct Truncation {
    double a = 0.0;
    double b = 0.0;
};

namespace detail {

// Doubling search in z for the point past which |y| has decayed below
// 1e-12 of its peak.  A profile that never decays has no finite total
// number, which is reported as a divergence.
inline double decay_point(const AnalyticRDSystem& sys, double direction) {
    double peak = 0.0;
    const double lo = sys.windows.z_lo, hi = sys.windows.z_hi;
    for (int i = 0; i <= 200; ++i) {
        const double z = lo + (hi - lo) * i / 200.0;
        peak = std::max(peak, std::fabs(static_cast<double>(sys.y(z))));
    }
    if (peak == 0) return 8.0;
    double L = 8.0;
    while (std::fabs(static_cast<double>(sys.y(direction * L))) > 1e-12 * peak) {
        L *= 2.0;
        if (L > 1e6) throw DivergentIntegralError("divergent total number");
    }
    return L;
}

} // namespace detail

inline Truncation find_truncation(const AnalyticRDSystem& sys, double t) {
    if (!(t > 0)) throw DomainError("similarity variable undefined at t <= 0");
    const double scale = std::pow(t, sys.exponents.alpha);
    if (sys.support_radius) {
        const double edge = static_cast<double>((*sys.support_radius)(t));
        Truncation tr{-edge, edge};
        if (sys.domain == SpatialDomain::HalfLineNonNegative) tr.a = 0.0;
        if (sys.domain == SpatialDomain::HalfLineNonPositive) tr.b = 0.0;
        return tr;
    }
    Truncation tr;
    tr.b = (sys.domain == SpatialDomain::HalfLineNonPositive)
               ? 0.0
               : detail::decay_point(sys, +1.0) * scale;
    tr.a = (sys.domain == SpatialDomain::HalfLineNonNegative)
               ? 0.0
               : -detail::decay_point(sys, -1.0) * scale;
    return tr;
}

// N(t) = integral of W(., t) over the (truncated) domain.  An explicit
// truncation half-width may be supplied; it must reach past the point where
// the density has decayed to 1e-12 of its peak, and is ignored for
// compact-support systems (their integral runs over the support exactly).
inline IntegralResult total_number(const AnalyticRDSystem& sys, double t, double truncation = 0.0) {
    Truncation tr = find_truncation(sys, t);
    if (truncation > 0.0 && !sys.support_radius) {
        Truncation req{-truncation, truncation};
        if (sys.domain == SpatialDomain::HalfLineNonNegative) req.a = 0.0;
        if (sys.domain == SpatialDomain::HalfLineNonPositive) req.b = 0.0;
        if (req.b < tr.b || req.a > tr.a)
            throw DomainError("truncation stops before the density has decayed");
        tr = req;
    }
    return integrate([&](hp x) { return sys.W(x, t); }, tr.a, tr.b, 1e-12, 1e-10, 20000);
}

// Fits the growth exponent of N(t) over the given times and compares it to
// alpha + mu (zero exactly for the conserving family).
inline ConservationReport check_N_scaling(const AnalyticRDSystem& sys,
                                          std::vector<double> times = {}) {
    if (times.empty()) {
        const double a = sys.windows.t_lo, b = sys.windows.t_hi;
        for (int i = 0; i < 4; ++i) times.push_back(a * std::pow(b / a, i / 3.0));
    }
    if (times.size() < 3) throw ContractError("N scaling fit needs at least 3 times");

    ConservationReport rep;
    rep.expected_exponent = sys.exponents.alpha + sys.exponents.mu;
    std::vector<double> lt, lN;
    for (double t : times) {
        const double N = static_cast<double>(total_number(sys, t).value);
        if (!(N > 0) || !std::isfinite(N))
            throw NumericFailure("total number not positive at t = " + std::to_string(t));
        rep.times.push_back(t);
        rep.N_values.push_back(N);
        lt.push_back(std::log(t));
        lN.push_back(std::log(N));
    }
    rep.fitted_exponent = fitted_slope(lt, lN);
    return rep;
}

// Windowed continuity identity of the reduced equation,
//   (alpha + mu) * int y dz = int sigma dz + [rho y'] + alpha [z y],
// with brackets evaluated at the window ends.  The defect is measured
// relative to the largest participating magnitude, so windows on which the
// flux terms dominate (exponentially growing coefficients) stay meaningful.
inline ConservationReport check_continuity_identity(const AnalyticRDSystem& sys,
                                                    double z_lo = std::nan(""),
                                                    double z_hi = std::nan("")) {
    if (std::isnan(z_lo)) z_lo = sys.windows.z_lo;
    if (std::isnan(z_hi)) z_hi = sys.windows.z_hi;
    if (!(z_lo < z_hi)) throw DomainError("identity window must satisfy z_lo < z_hi");

    const double alpha = sys.exponents.alpha;
    const double mu = sys.exponents.mu;

    const double int_y = static_cast<double>(
        integrate([&](hp z) { return sys.y(z); }, z_lo, z_hi, 1e-12, 1e-10, 20000).value);
    const double int_sigma = static_cast<double>(
        integrate([&](hp z) { return sys.sigma(z); }, z_lo, z_hi, 1e-12, 1e-10, 20000).value);

    auto flux = [&](double z) {
        return static_cast<double>(sys.rho(z) * sys.y.derivative(z));
    };
    const double d_flux = flux(z_hi) - flux(z_lo);
    const double d_zy = z_hi * static_cast<double>(sys.y(z_hi)) -
                        z_lo * static_cast<double>(sys.y(z_lo));

    ConservationReport rep;
    rep.expected_exponent = alpha + mu;
    rep.identity_lhs = (alpha + mu) * int_y;
    rep.identity_rhs = int_sigma + d_flux + alpha * d_zy;
    const double scale = std::max({std::fabs(rep.identity_lhs), std::fabs(int_sigma),
                                   std::fabs(d_flux), 1.0});
    rep.defect = std::fabs(rep.identity_lhs - rep.identity_rhs) / scale;
    return rep;
}

} // namespace rdsim
