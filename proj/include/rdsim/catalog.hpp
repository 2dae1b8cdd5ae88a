#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "rdsim/errors.hpp"
#include "rdsim/system.hpp"

namespace rdsim {

namespace detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline const hp pi = 3.141592653589793238462643383279502884L;

} // namespace detail

// ---------------------------------------------------------------------------
// Conserving family (mu = -alpha): the reduced equation has the first
// integral rho y' + alpha z y = tau, and the source is f = -t^(mu-1) tau'(z).
// ---------------------------------------------------------------------------

// Drift-diffusion with rho = 1 and tau(z) = (beta1 z + beta0) y(z), solved by
// a normalized Gaussian centered at beta0 t^alpha / (alpha - beta1); requires
// alpha > beta1.  With alpha = 1/2, beta0 = beta1 = 0 this is the unit-mass
// heat kernel.
inline AnalyticRDSystem fp_gaussian_drift(double alpha, double beta0, double beta1) {
    if (!(alpha > beta1))
        throw ParamConstraintViolation(
            "alpha", "alpha > beta1",
            "fp_gaussian_drift: alpha = " + detail::num(alpha) + " violates alpha > beta1 = " +
                detail::num(beta1) + " (profile must decay)");

    const hp k = static_cast<hp>(alpha) - static_cast<hp>(beta1);
    const hp m = static_cast<hp>(beta0) / k;
    const hp A = std::sqrt(k / (2.0L * detail::pi));

    AnalyticRDSystem s;
    s.name = "FP-GAUSS";
    s.family = "conserving / drift-diffusion (rho = 1)";
    s.domain = SpatialDomain::FullLine;
    s.exponents = {alpha, -alpha};
    s.params = {{"alpha", alpha}, {"beta0", beta0}, {"beta1", beta1}};

    auto yv = [A, k, m](hp z) { return A * std::exp(-0.5L * k * (z - m) * (z - m)); };
    s.y = Profile{yv, [yv, k, m](hp z) { return -k * (z - m) * yv(z); },
                  [yv, k, m](hp z) { return (k * k * (z - m) * (z - m) - k) * yv(z); }};
    s.rho = Profile::constant(1.0L);

    const hp b0 = beta0, b1 = beta1;
    auto tauv = [yv, b0, b1](hp z) { return (b1 * z + b0) * yv(z); };
    auto taud = [yv, k, m, b0, b1](hp z) {
        return b1 * yv(z) + (b1 * z + b0) * (-k * (z - m) * yv(z));
    };
    s.tau = Profile{tauv, taud, {}};
    s.sigma = Profile{[taud](hp z) { return -taud(z); }, {}, {}};

    const double a = alpha;
    s.D = CoefficientField{[a](hp, hp, hp t) { return std::pow(t, static_cast<hp>(2 * a - 1)); }, false};
    s.f = CoefficientField{[a, taud](hp, hp x, hp t) {
                               const hp z = x / std::pow(t, static_cast<hp>(a));
                               return -std::pow(t, static_cast<hp>(-(a + 1))) * taud(z);
                           },
                           false};
    s.W = SpaceTimeField{[a, k, b0](hp x, hp t) {
        if (!(t > 0.0L)) throw DomainError("similarity variable undefined at t <= 0");
        const hp t2a = std::pow(t, static_cast<hp>(2 * a));
        const hp shift = x - b0 * std::pow(t, static_cast<hp>(a)) / k;
        return std::sqrt(k / (2.0L * detail::pi * t2a)) * std::exp(-0.5L * k * shift * shift / t2a);
    }};

    s.windows = {-8.0, 8.0, 1.0, 3.0, -6.0, 6.0};
    s.constraint_note = "alpha > beta1";
    return s;
}

// rho = 1 with tau(z) = 2 gamma z exp(-eta z^2); the profile is a pair of
// Gaussians, y = 2 gamma/(alpha-2 eta) e^(-eta z^2) + C e^(-alpha z^2/2).
// Nonnegativity bounds C from below by the slower-decaying component.
inline AnalyticRDSystem nonfp_gaussian_pair(double alpha, double gamma, double eta, double C) {
    if (!(eta > 0))
        throw ParamConstraintViolation("eta", "eta > 0",
                                       "nonfp_gaussian_pair: eta = " + detail::num(eta) +
                                           " violates eta > 0");
    if (alpha == 2 * eta)
        throw DegenerateParameterError(
            "nonfp_gaussian_pair: alpha = 2*eta collapses the Gaussian pair (degenerate)");

    // W >= 0 on the full line.  The component with the slower quadratic decay
    // dominates as |z| grows, so its coefficient must be nonnegative and C is
    // bounded by the documented |alpha - 2*eta| expressions.
    const double bound = 2 * gamma / std::fabs(alpha - 2 * eta);
    if (alpha > 2 * eta) {
        if (gamma < 0)
            throw ParamConstraintViolation(
                "gamma", "gamma >= 0 (alpha > 2*eta)",
                "nonfp_gaussian_pair: gamma = " + detail::num(gamma) +
                    " makes the dominant component negative; gamma >= 0 required when alpha > 2*eta");
        if (C < -bound)
            throw ParamConstraintViolation(
                "C", "C >= -2*gamma/|alpha - 2*eta| (alpha > 2*eta)",
                "nonfp_gaussian_pair: C = " + detail::num(C) + " violates C >= " +
                    detail::num(-bound) + " (= -2*gamma/|alpha - 2*eta|)");
    } else {
        const double lo = std::max(0.0, bound);
        if (C < lo)
            throw ParamConstraintViolation(
                "C", "C >= +2*gamma/|alpha - 2*eta| (alpha < 2*eta)",
                "nonfp_gaussian_pair: C = " + detail::num(C) + " violates C >= " + detail::num(lo) +
                    " (= 2*gamma/|alpha - 2*eta|)");
    }

    AnalyticRDSystem s;
    s.name = "NFP-GAUSS";
    s.family = "conserving / gaussian pair (rho = 1)";
    s.domain = SpatialDomain::FullLine;
    s.exponents = {alpha, -alpha};
    s.params = {{"alpha", alpha}, {"gamma", gamma}, {"eta", eta}, {"C", C}};

    const hp a = alpha, g = gamma, e = eta, c = C;
    const hp A = 2.0L * g / (a - 2.0L * e);
    auto yv = [A, e, c, a](hp z) {
        return A * std::exp(-e * z * z) + c * std::exp(-0.5L * a * z * z);
    };
    s.y = Profile{
        yv,
        [A, e, c, a](hp z) {
            return -2.0L * e * z * A * std::exp(-e * z * z) - a * z * c * std::exp(-0.5L * a * z * z);
        },
        [A, e, c, a](hp z) {
            return A * (4.0L * e * e * z * z - 2.0L * e) * std::exp(-e * z * z) +
                   c * (a * a * z * z - a) * std::exp(-0.5L * a * z * z);
        }};
    s.rho = Profile::constant(1.0L);

    auto tauv = [g, e](hp z) { return 2.0L * g * z * std::exp(-e * z * z); };
    auto taud = [g, e](hp z) { return 2.0L * g * (1.0L - 2.0L * e * z * z) * std::exp(-e * z * z); };
    s.tau = Profile{tauv, taud, {}};
    s.sigma = Profile{[taud](hp z) { return -taud(z); }, {}, {}};

    const double ad = alpha;
    s.D = CoefficientField{[ad](hp, hp, hp t) { return std::pow(t, static_cast<hp>(2 * ad - 1)); },
                           false};
    s.f = CoefficientField{[ad, g, e](hp, hp x, hp t) {
                               const hp z = x / std::pow(t, static_cast<hp>(ad));
                               return -2.0L * g * (1.0L - 2.0L * e * z * z) *
                                      std::pow(t, static_cast<hp>(-(ad + 1))) * std::exp(-e * z * z);
                           },
                           false};
    s.W = SpaceTimeField{[ad, yv](hp x, hp t) {
        return std::pow(t, static_cast<hp>(-ad)) * yv(similarity_variable(x, t, ad));
    }};

    s.windows = {-10.0, 10.0, 1.0, 3.0, -6.0, 6.0};
    s.constraint_note =
        "eta > 0; alpha != 2*eta; C >= -2*gamma/|alpha-2*eta| (alpha > 2*eta) or C >= "
        "+2*gamma/|alpha-2*eta| (alpha < 2*eta)";
    return s;
}

// Half-line system with rho = z and tau(z) = z exp(-eta z); the profile is an
// exponential pair y = e^(-eta z)/(alpha-eta) + C e^(-alpha z) and the
// diffusivity is D = t^(alpha-1) x.
inline AnalyticRDSystem nonfp_exponential_pair(double alpha, double eta, double C) {
    if (!(eta > 0))
        throw ParamConstraintViolation("eta", "eta > 0",
                                       "nonfp_exponential_pair: eta = " + detail::num(eta) +
                                           " violates eta > 0");
    if (!(alpha > 0))
        throw ParamConstraintViolation("alpha", "alpha > 0",
                                       "nonfp_exponential_pair: alpha = " + detail::num(alpha) +
                                           " violates alpha > 0");
    if (alpha == eta)
        throw DegenerateParameterError(
            "nonfp_exponential_pair: alpha = eta collapses the exponential pair (degenerate)");
    const double bound = 1.0 / std::fabs(alpha - eta);
    // rounding slack so that exact equality (C = bound up to one ulp) is admissible
    if (C < bound * (1.0 - 1e-12))
        throw ParamConstraintViolation(
            "C", "C >= 1/|alpha - eta|",
            "nonfp_exponential_pair: C = " + detail::num(C) + " violates C >= " +
                detail::num(bound) + " (= 1/|alpha - eta|)");

    AnalyticRDSystem s;
    s.name = "NFP-EXP";
    s.family = "conserving / exponential pair (rho = z)";
    s.domain = SpatialDomain::HalfLineNonNegative;
    s.exponents = {alpha, -alpha};
    s.params = {{"alpha", alpha}, {"eta", eta}, {"C", C}};

    const hp a = alpha, e = eta, c = C;
    const hp B = 1.0L / (a - e);
    auto yv = [B, e, c, a](hp z) { return B * std::exp(-e * z) + c * std::exp(-a * z); };
    s.y = Profile{yv,
                  [B, e, c, a](hp z) { return -e * B * std::exp(-e * z) - a * c * std::exp(-a * z); },
                  [B, e, c, a](hp z) {
                      return e * e * B * std::exp(-e * z) + a * a * c * std::exp(-a * z);
                  }};
    s.rho = Profile{[](hp z) { return z; }, [](hp) { return 1.0L; }, [](hp) { return 0.0L; }};

    auto tauv = [e](hp z) { return z * std::exp(-e * z); };
    auto taud = [e](hp z) { return (1.0L - e * z) * std::exp(-e * z); };
    s.tau = Profile{tauv, taud, {}};
    s.sigma = Profile{[taud](hp z) { return -taud(z); }, {}, {}};

    const double ad = alpha;
    s.D = CoefficientField{[ad](hp, hp x, hp t) { return std::pow(t, static_cast<hp>(ad - 1)) * x; },
                           false};
    s.f = CoefficientField{[ad, taud](hp, hp x, hp t) {
                               const hp z = x / std::pow(t, static_cast<hp>(ad));
                               return -std::pow(t, static_cast<hp>(-(ad + 1))) * taud(z);
                           },
                           false};
    s.W = SpaceTimeField{[ad, yv](hp x, hp t) {
        return std::pow(t, static_cast<hp>(-ad)) * yv(similarity_variable(x, t, ad));
    }};

    s.windows = {0.0, 20.0, 1.0, 1.5, 0.0, 10.0};
    s.constraint_note = "eta > 0; alpha > 0; alpha != eta; C >= 1/|alpha - eta|";
    return s;
}

// Half-line system with quadratic mobility rho = alpha z^2, Gaussian profile
// y = exp(-beta z^2), and D = alpha x^2 / t.  The source follows from the
// first integral: f = -t^(-(alpha+1)) tau'(z) with
// tau = alpha z (1 - 2 beta z^2) e^(-beta z^2).
inline AnalyticRDSystem nonfp_quadratic_rho(double alpha, double beta) {
    if (!(alpha > 0))
        throw ParamConstraintViolation("alpha", "alpha > 0",
                                       "nonfp_quadratic_rho: alpha = " + detail::num(alpha) +
                                           " violates alpha > 0");
    if (!(beta > 0))
        throw ParamConstraintViolation("beta", "beta > 0",
                                       "nonfp_quadratic_rho: beta = " + detail::num(beta) +
                                           " violates beta > 0");

    AnalyticRDSystem s;
    s.name = "NFP-QUAD";
    s.family = "conserving / quadratic mobility (rho = alpha z^2)";
    s.domain = SpatialDomain::HalfLineNonNegative;
    s.exponents = {alpha, -alpha};
    s.params = {{"alpha", alpha}, {"beta", beta}};

    const hp a = alpha, b = beta;
    auto yv = [b](hp z) { return std::exp(-b * z * z); };
    s.y = Profile{yv, [b, yv](hp z) { return -2.0L * b * z * yv(z); },
                  [b, yv](hp z) { return (4.0L * b * b * z * z - 2.0L * b) * yv(z); }};
    s.rho = Profile{[a](hp z) { return a * z * z; }, [a](hp z) { return 2.0L * a * z; },
                    [a](hp) { return 2.0L * a; }};

    auto tauv = [a, b, yv](hp z) { return a * z * (1.0L - 2.0L * b * z * z) * yv(z); };
    auto taud = [a, b, yv](hp z) {
        const hp z2 = z * z;
        return a * (1.0L - 8.0L * b * z2 + 4.0L * b * b * z2 * z2) * yv(z);
    };
    s.tau = Profile{tauv, taud, {}};
    s.sigma = Profile{[taud](hp z) { return -taud(z); }, {}, {}};

    const double ad = alpha;
    s.D = CoefficientField{[ad](hp, hp x, hp t) { return static_cast<hp>(ad) * x * x / t; }, false};
    s.f = CoefficientField{[ad, taud](hp, hp x, hp t) {
                               const hp z = x / std::pow(t, static_cast<hp>(ad));
                               return -std::pow(t, static_cast<hp>(-(ad + 1))) * taud(z);
                           },
                           false};
    s.W = SpaceTimeField{[ad, yv](hp x, hp t) {
        return std::pow(t, static_cast<hp>(-ad)) * yv(similarity_variable(x, t, ad));
    }};

    s.windows = {0.0, 10.0, 1.0, 3.0, 0.0, 6.0};
    s.constraint_note = "alpha > 0; beta > 0";
    return s;
}

// Degenerate nonlinear diffusion D = W^n with no source.  The compactly
// supported profile is y = (C - n z^2 / (2(n+2)))^(1/n) inside
// |z| <= sqrt(2(n+2)C/n) and 0 outside; alpha = -mu = 1/(n+2) is forced.
inline AnalyticRDSystem nonlinear_diffusion(int n, double C) {
    if (n == 0)
        throw DegenerateParameterError(
            "nonlinear_diffusion: n = 0 is linear diffusion; use FP-GAUSS");
    if (n < 1)
        throw ParamConstraintViolation("n", "n >= 1 (integer)",
                                       "nonlinear_diffusion: n = " + std::to_string(n) +
                                           " violates n >= 1");
    if (!(C > 0))
        throw ParamConstraintViolation(
            "C", "C > 0", "nonlinear_diffusion: C = " + detail::num(C) + " violates C > 0");

    const double alpha = 1.0 / (n + 2);

    AnalyticRDSystem s;
    s.name = "NL-DIFF";
    s.family = "conserving / degenerate nonlinear diffusion (D = W^n)";
    s.domain = SpatialDomain::FullLine;
    s.exponents = {alpha, -alpha};
    s.params = {{"n", static_cast<double>(n)}, {"C", C}};
    s.derived = {{"alpha", alpha}};

    const hp a = alpha, c = C;
    const int nn = n;
    const hp z_edge = std::sqrt(2.0L * c / (nn * a));
    // P(z) = C - n*alpha*z^2/2 = y^n; clamped at 0 outside the support.
    auto P = [c, nn, a](hp z) { return std::max<hp>(0.0L, c - 0.5L * nn * a * z * z); };
    auto inside = [z_edge](hp z) { return std::fabs(z) < z_edge; };

    auto yv = [P, nn](hp z) { return std::pow(P(z), 1.0L / nn); };
    s.y = Profile{yv,
                  [P, inside, nn, a](hp z) {
                      if (!inside(z)) return 0.0L;
                      return -a * z * std::pow(P(z), 1.0L / nn - 1.0L);
                  },
                  [P, inside, nn, a](hp z) {
                      if (!inside(z)) return 0.0L;
                      return -a * std::pow(P(z), 1.0L / nn - 1.0L) +
                             (nn - 1) * a * a * z * z * std::pow(P(z), 1.0L / nn - 2.0L);
                  }};
    // rho = y^n = P exactly.
    s.rho = Profile{P, [inside, nn, a](hp z) { return inside(z) ? -static_cast<hp>(nn) * a * z : 0.0L; },
                    [inside, nn, a](hp z) { return inside(z) ? -static_cast<hp>(nn) * a : 0.0L; }};
    s.tau = Profile::zero();
    s.sigma = Profile::zero();

    s.D = CoefficientField{[nn](hp w, hp, hp) { return std::pow(w, static_cast<hp>(nn)); }, true};
    s.f = CoefficientField{[](hp, hp, hp) { return 0.0L; }, false};
    s.W = SpaceTimeField{[c, nn, a](hp x, hp t) {
        if (!(t > 0.0L)) throw DomainError("similarity variable undefined at t <= 0");
        const hp arg =
            c * std::pow(t, static_cast<hp>(-nn) / (nn + 2)) - 0.5L * nn * x * x / ((nn + 2) * t);
        return std::pow(std::max<hp>(0.0L, arg), 1.0L / nn);
    }};
    s.support_radius = [z_edge, a](hp t) { return z_edge * std::pow(t, a); };

    const double edge = static_cast<double>(z_edge);
    s.windows = {-0.95 * edge, 0.95 * edge, 1.0, 3.0, -0.9 * edge, 0.9 * edge};
    s.alpha_note = "derived: alpha = 1/(n+2)";
    s.constraint_note = "n >= 1 integer; C > 0";
    return s;
}

// ---------------------------------------------------------------------------
// Growth family (mu != -alpha): no first integral; the source is read off
// the reduced equation for a chosen profile.
// ---------------------------------------------------------------------------

// rho = 1 with Gaussian profile y = exp(-c z^2/2); the source is
// f = t^(mu-1) [c(alpha-c) z^2 + (mu+c)] y(z).
inline AnalyticRDSystem growth_gaussian(double alpha, double mu, double c) {
    if (!(c > 0))
        throw ParamConstraintViolation(
            "c", "c > 0", "growth_gaussian: c = " + detail::num(c) + " violates c > 0");
    if (mu == -alpha)
        throw DegenerateParameterError(
            "growth_gaussian: mu = -alpha is conserving; use the conserving family");

    AnalyticRDSystem s;
    s.name = "GR-GAUSS";
    s.family = "growth / constant mobility (rho = 1)";
    s.domain = SpatialDomain::FullLine;
    s.exponents = {alpha, mu};
    s.params = {{"alpha", alpha}, {"mu", mu}, {"c", c}};

    const hp a = alpha, m = mu, cc = c;
    auto yv = [cc](hp z) { return std::exp(-0.5L * cc * z * z); };
    s.y = Profile{yv, [cc, yv](hp z) { return -cc * z * yv(z); },
                  [cc, yv](hp z) { return (cc * cc * z * z - cc) * yv(z); }};
    s.rho = Profile::constant(1.0L);
    s.sigma = Profile{[a, m, cc, yv](hp z) { return (cc * (a - cc) * z * z + (m + cc)) * yv(z); },
                      {},
                      {}};

    const double ad = alpha, md = mu;
    s.D = CoefficientField{[ad](hp, hp, hp t) { return std::pow(t, static_cast<hp>(2 * ad - 1)); },
                           false};
    s.f = CoefficientField{[ad, md, cc](hp, hp x, hp t) {
                               const hp z = x / std::pow(t, static_cast<hp>(ad));
                               return std::pow(t, static_cast<hp>(md - 1)) *
                                      (cc * (ad - cc) * z * z + (md + cc)) *
                                      std::exp(-0.5L * cc * z * z);
                           },
                           false};
    s.W = SpaceTimeField{[ad, md, yv](hp x, hp t) {
        return std::pow(t, static_cast<hp>(md)) * yv(similarity_variable(x, t, ad));
    }};

    s.windows = {-8.0, 8.0, 1.0, 3.0, -6.0, 6.0};
    s.constraint_note = "c > 0; mu != -alpha";
    return s;
}

// Half-line system with rho = beta z and exponential profile y = exp(-c z);
// the source is f = t^(mu-1) [c(alpha - beta c) z + (mu + beta c)] y(z).
inline AnalyticRDSystem growth_halfline(double alpha, double mu, double beta, double c) {
    if (!(beta > 0))
        throw ParamConstraintViolation(
            "beta", "beta > 0", "growth_halfline: beta = " + detail::num(beta) + " violates beta > 0");
    if (!(c > 0))
        throw ParamConstraintViolation(
            "c", "c > 0", "growth_halfline: c = " + detail::num(c) + " violates c > 0");
    if (mu == -alpha)
        throw DegenerateParameterError(
            "growth_halfline: mu = -alpha is conserving; use the conserving family");

    AnalyticRDSystem s;
    s.name = "GR-HALF";
    s.family = "growth / linear mobility (rho = beta z)";
    s.domain = SpatialDomain::HalfLineNonNegative;
    s.exponents = {alpha, mu};
    s.params = {{"alpha", alpha}, {"mu", mu}, {"beta", beta}, {"c", c}};

    const hp a = alpha, m = mu, bb = beta, cc = c;
    auto yv = [cc](hp z) { return std::exp(-cc * z); };
    s.y = Profile{yv, [cc, yv](hp z) { return -cc * yv(z); },
                  [cc, yv](hp z) { return cc * cc * yv(z); }};
    s.rho = Profile{[bb](hp z) { return bb * z; }, [bb](hp) { return bb; }, [](hp) { return 0.0L; }};
    s.sigma = Profile{
        [a, m, bb, cc, yv](hp z) { return (cc * (a - bb * cc) * z + (m + bb * cc)) * yv(z); },
        {},
        {}};

    const double ad = alpha, md = mu;
    s.D = CoefficientField{
        [ad, bb](hp, hp x, hp t) { return bb * std::pow(t, static_cast<hp>(ad - 1)) * x; }, false};
    s.f = CoefficientField{[ad, md, bb, cc](hp, hp x, hp t) {
                               const hp z = x / std::pow(t, static_cast<hp>(ad));
                               return std::pow(t, static_cast<hp>(md - 1)) *
                                      (cc * (ad - bb * cc) * z + (md + bb * cc)) * std::exp(-cc * z);
                           },
                           false};
    s.W = SpaceTimeField{[ad, md, yv](hp x, hp t) {
        return std::pow(t, static_cast<hp>(md)) * yv(similarity_variable(x, t, ad));
    }};

    s.windows = {0.0, 30.0, 1.0, 3.0, 0.0, 10.0};
    s.constraint_note = "beta > 0; c > 0; mu != -alpha";
    return s;
}

enum class QuadraticVariant {
    Exponential, // y = exp(-z), half-line
    Gaussian,    // y = exp(-z^2/2), full line
};

// rho = -alpha z^2 / 2, so D = -alpha x^2/(2t) is negative for alpha > 0:
// the reduced equation is solvable but the PDE is anti-parabolic and is
// excluded from time integration.
inline AnalyticRDSystem growth_quadratic(double alpha, double mu, QuadraticVariant variant) {
    if (alpha == 0)
        throw DegenerateParameterError("growth_quadratic: alpha = 0 makes rho vanish (degenerate)");
    if (mu == -alpha)
        throw DegenerateParameterError(
            "growth_quadratic: mu = -alpha is conserving; use the conserving family");

    AnalyticRDSystem s;
    const bool expo = variant == QuadraticVariant::Exponential;
    s.name = expo ? "GR-Q1" : "GR-Q2";
    s.family = "growth / anti-parabolic quadratic mobility";
    s.domain = expo ? SpatialDomain::HalfLineNonNegative : SpatialDomain::FullLine;
    s.exponents = {alpha, mu};
    s.params = {{"alpha", alpha}, {"mu", mu}};

    const hp a = alpha, m = mu;
    if (expo) {
        auto yv = [](hp z) { return std::exp(-z); };
        s.y = Profile{yv, [yv](hp z) { return -yv(z); }, [yv](hp z) { return yv(z); }};
        s.sigma = Profile{[a, m, yv](hp z) { return (0.5L * a * z * z + m) * yv(z); }, {}, {}};
        s.windows = {0.0, 30.0, 1.0, 3.0, 0.0, 10.0};
    } else {
        auto yv = [](hp z) { return std::exp(-0.5L * z * z); };
        s.y = Profile{yv, [yv](hp z) { return -z * yv(z); },
                      [yv](hp z) { return (z * z - 1.0L) * yv(z); }};
        s.sigma = Profile{
            [a, m, yv](hp z) { return (0.5L * a * z * z * (z * z - 1.0L) + m) * yv(z); }, {}, {}};
        s.windows = {-8.0, 8.0, 1.0, 3.0, -6.0, 6.0};
    }
    s.rho = Profile{[a](hp z) { return -0.5L * a * z * z; }, [a](hp z) { return -a * z; },
                    [a](hp) { return -a; }};

    const double ad = alpha, md = mu;
    s.D = CoefficientField{[ad](hp, hp x, hp t) { return -0.5L * static_cast<hp>(ad) * x * x / t; },
                           false};
    if (expo) {
        s.f = CoefficientField{[ad, md](hp, hp x, hp t) {
                                   const hp z = x / std::pow(t, static_cast<hp>(ad));
                                   return std::pow(t, static_cast<hp>(md - 1)) *
                                          (0.5L * ad * z * z + md) * std::exp(-z);
                               },
                               false};
        s.W = SpaceTimeField{[ad, md](hp x, hp t) {
            return std::pow(t, static_cast<hp>(md)) * std::exp(-similarity_variable(x, t, ad));
        }};
    } else {
        s.f = CoefficientField{[ad, md](hp, hp x, hp t) {
                                   const hp z = x / std::pow(t, static_cast<hp>(ad));
                                   return std::pow(t, static_cast<hp>(md - 1)) *
                                          (0.5L * ad * z * z * (z * z - 1.0L) + md) *
                                          std::exp(-0.5L * z * z);
                               },
                               false};
        s.W = SpaceTimeField{[ad, md](hp x, hp t) {
            const hp z = similarity_variable(x, t, ad);
            return std::pow(t, static_cast<hp>(md)) * std::exp(-0.5L * z * z);
        }};
    }

    s.solver_eligible = false;
    if (alpha > 0) s.warnings.push_back("negative diffusion coefficient");
    s.constraint_note = "alpha != 0; mu != -alpha";
    return s;
}

// Generalized Fisher front in a frame with alpha = 0: the profile
// y(x) = (1 + C e^(b x))^(-2/n) solves y'' + gamma y' + y(1 - y^n) = 0 with
// gamma = h + 1/h, b = h - 1/h, h = sqrt(n/2 + 1).  Only the gamma > 0 branch
// is built; sign = -1 selects its mirror image (x -> -x flips both b and the
// gamma appearing in D = beta t^(-1) e^(gamma x)).
inline AnalyticRDSystem fisher_scaling(double n, double mu, double beta, double C, int sign) {
    if (!(n > 0))
        throw ParamConstraintViolation(
            "n", "n > 0", "fisher_scaling: n = " + detail::num(n) + " violates n > 0");
    if (!(beta > 0))
        throw ParamConstraintViolation(
            "beta", "beta > 0", "fisher_scaling: beta = " + detail::num(beta) + " violates beta > 0");
    if (!(C > 0))
        throw ParamConstraintViolation(
            "C", "C > 0", "fisher_scaling: C = " + detail::num(C) + " violates C > 0");
    if (sign != 1 && sign != -1)
        throw ParamConstraintViolation("sign", "sign in {+, -}",
                                       "fisher_scaling: sign must be +1 or -1");
    if (mu == 0.0)
        throw DegenerateParameterError(
            "fisher_scaling: mu = 0 is conserving (alpha = 0); use the conserving family");

    const hp h = std::sqrt(static_cast<hp>(n) / 2.0L + 1.0L);
    const hp gamma0 = h + 1.0L / h;
    const hp b = sign * (h - 1.0L / h);
    const hp gamma = sign * gamma0;

    AnalyticRDSystem s;
    s.name = "FISHER-N";
    s.family = "growth / fisher front (alpha = 0)";
    s.domain = SpatialDomain::FullLine;
    s.exponents = {0.0, mu};
    s.params = {{"n", n}, {"mu", mu}, {"beta", beta}, {"C", C}, {"sign", static_cast<double>(sign)}};
    s.derived = {{"h", static_cast<double>(h)},
                 {"gamma", static_cast<double>(gamma)},
                 {"b", static_cast<double>(b)}};

    const hp nn = n, cc = C, bb = beta, md = mu;
    const hp lnC = std::log(cc);
    // u = C e^(bx) can overflow long double for extreme |x|; switch to the
    // asymptotic tail y ~ e^(-(2/n)(bx + ln C)) well before that.
    auto yv = [b, nn, cc, lnC](hp x) {
        const hp w = b * x + lnC;
        if (w > 11000.0L) return std::exp(-(2.0L / nn) * w);
        return std::exp(-(2.0L / nn) * std::log1p(cc * std::exp(b * x)));
    };
    // With r = u/(1+u) in (0,1):  y' = -(2b/n) r y  and
    // y'' = -(2b^2/n) [r(1-r) - (2/n) r^2] y, both overflow-safe.
    auto ratio = [b, cc, lnC](hp x) {
        const hp w = b * x + lnC;
        if (w > 11000.0L) return 1.0L;
        const hp u = cc * std::exp(b * x);
        return u / (1.0L + u);
    };
    auto yd1 = [b, nn, yv, ratio](hp x) { return -(2.0L * b / nn) * ratio(x) * yv(x); };
    auto yd2 = [b, nn, yv, ratio](hp x) {
        const hp r = ratio(x);
        return -(2.0L * b * b / nn) * (r * (1.0L - r) - (2.0L / nn) * r * r) * yv(x);
    };
    s.y = Profile{yv, yd1, yd2};
    s.rho = Profile{[bb, gamma](hp z) { return bb * std::exp(gamma * z); },
                    [bb, gamma](hp z) { return bb * gamma * std::exp(gamma * z); },
                    [bb, gamma](hp z) { return bb * gamma * gamma * std::exp(gamma * z); }};
    s.sigma = Profile{[md, bb, gamma, nn, yv](hp z) {
                          const hp y = yv(z);
                          return md * y + bb * std::exp(gamma * z) * y * (1.0L - std::pow(y, nn));
                      },
                      {},
                      {}};

    s.D = CoefficientField{[bb, gamma](hp, hp x, hp t) { return bb * std::exp(gamma * x) / t; },
                           false};
    s.f = CoefficientField{[md, bb, gamma, nn](hp w, hp x, hp t) {
                               return (md * w +
                                       bb * std::exp(gamma * x) * w *
                                           (1.0L - std::pow(t, -nn * md) * std::pow(w, nn))) /
                                      t;
                           },
                           true};
    s.W = SpaceTimeField{[md, yv](hp x, hp t) {
        if (!(t > 0.0L)) throw DomainError("similarity variable undefined at t <= 0");
        return std::pow(t, md) * yv(x);
    }};

    // Reduced-equation terms grow like e^(gamma x) on the right; cap the
    // sampling window so the residual stays resolvable above cancellation
    // noise on the finite-difference path as well as the analytic one.
    const double z_hi = std::min(20.0, static_cast<double>(12.0L / h));
    s.windows = {-20.0, z_hi, 0.05, 0.2, -5.0, 5.0};
    s.alpha_note = "fixed: alpha = 0";
    s.constraint_note = "n > 0; beta > 0; C > 0; mu != 0; sign in {+, -}";
    return s;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

inline const std::vector<SystemDescriptor>& list_systems() {
    static const std::vector<SystemDescriptor> table = [] {
        auto desc = [](const AnalyticRDSystem& s, std::vector<ParamDef> params) {
            SystemDescriptor d;
            d.name = s.name;
            d.family = s.family;
            d.alpha = s.exponents.alpha;
            d.mu = s.exponents.mu;
            d.alpha_note = s.alpha_note;
            d.conserving = s.conserving();
            d.solver_eligible = s.solver_eligible;
            d.params = std::move(params);
            d.constraint_note = s.constraint_note;
            d.warnings = s.warnings;
            return d;
        };
        std::vector<SystemDescriptor> v;
        v.push_back(desc(fp_gaussian_drift(0.5, 0.0, 0.0),
                         {{"alpha", 0.5, "similarity exponent"},
                          {"beta0", 0.0, "constant drift coefficient"},
                          {"beta1", 0.0, "linear drift coefficient"}}));
        v.push_back(desc(nonfp_gaussian_pair(0.6, 2.0, 0.1, 1.0),
                         {{"alpha", 0.6, "similarity exponent"},
                          {"gamma", 2.0, "source amplitude"},
                          {"eta", 0.1, "source decay rate"},
                          {"C", 1.0, "homogeneous-solution amplitude"}}));
        v.push_back(desc(nonfp_exponential_pair(2.0, 1.0, 1.0),
                         {{"alpha", 2.0, "similarity exponent"},
                          {"eta", 1.0, "source decay rate"},
                          {"C", 1.0, "homogeneous-solution amplitude"}}));
        v.push_back(desc(nonfp_quadratic_rho(1.0, 1.0),
                         {{"alpha", 1.0, "similarity exponent and mobility scale"},
                          {"beta", 1.0, "profile decay rate"}}));
        v.push_back(desc(nonlinear_diffusion(1, 1.0),
                         {{"n", 1.0, "diffusivity exponent (integer >= 1)"},
                          {"C", 1.0, "profile amplitude"}}));
        v.push_back(desc(growth_gaussian(1.0, 0.5, 1.0),
                         {{"alpha", 1.0, "similarity exponent"},
                          {"mu", 0.5, "growth exponent"},
                          {"c", 1.0, "profile decay rate"}}));
        v.push_back(desc(growth_halfline(1.0, 0.5, 1.0, 1.0),
                         {{"alpha", 1.0, "similarity exponent"},
                          {"mu", 0.5, "growth exponent"},
                          {"beta", 1.0, "mobility scale"},
                          {"c", 1.0, "profile decay rate"}}));
        v.push_back(desc(growth_quadratic(1.0, 0.5, QuadraticVariant::Exponential),
                         {{"alpha", 1.0, "similarity exponent and mobility scale"},
                          {"mu", 0.5, "growth exponent"}}));
        v.push_back(desc(growth_quadratic(1.0, 0.5, QuadraticVariant::Gaussian),
                         {{"alpha", 1.0, "similarity exponent and mobility scale"},
                          {"mu", 0.5, "growth exponent"}}));
        v.push_back(desc(fisher_scaling(3.0, -1.0, 1.0, 1.0, +1),
                         {{"n", 3.0, "reaction exponent"},
                          {"mu", -1.0, "growth exponent"},
                          {"beta", 1.0, "diffusivity scale"},
                          {"C", 1.0, "front offset"},
                          {"sign", 1.0, "front orientation (+1 or -1)"}}));
        return v;
    }();
    return table;
}

// Build a catalog system by name from key=value overrides of the documented
// defaults.  Unknown names and unknown keys are usage errors.
inline AnalyticRDSystem make_system(const std::string& name,
                                    const std::map<std::string, double>& overrides = {}) {
    const SystemDescriptor* d = nullptr;
    for (const auto& cand : list_systems())
        if (cand.name == name) d = &cand;
    if (!d) throw UnknownSystemError("unknown system: " + name);

    std::map<std::string, double> p;
    for (const auto& def : d->params) p[def.key] = def.default_value;
    for (const auto& [k, val] : overrides) {
        if (!p.count(k))
            throw ParamConstraintViolation(k, "known parameter key",
                                           "system " + name + " has no parameter '" + k + "'");
        p[k] = val;
    }

    if (name == "FP-GAUSS") return fp_gaussian_drift(p["alpha"], p["beta0"], p["beta1"]);
    if (name == "NFP-GAUSS") return nonfp_gaussian_pair(p["alpha"], p["gamma"], p["eta"], p["C"]);
    if (name == "NFP-EXP") return nonfp_exponential_pair(p["alpha"], p["eta"], p["C"]);
    if (name == "NFP-QUAD") return nonfp_quadratic_rho(p["alpha"], p["beta"]);
    if (name == "NL-DIFF") {
        const double nf = p["n"];
        if (nf != std::floor(nf) || std::fabs(nf) > 1e9)
            throw ParamConstraintViolation("n", "n >= 1 (integer)",
                                           "nonlinear_diffusion: n = " + detail::num(nf) +
                                               " is not an integer");
        return nonlinear_diffusion(static_cast<int>(nf), p["C"]);
    }
    if (name == "GR-GAUSS") return growth_gaussian(p["alpha"], p["mu"], p["c"]);
    if (name == "GR-HALF") return growth_halfline(p["alpha"], p["mu"], p["beta"], p["c"]);
    if (name == "GR-Q1") return growth_quadratic(p["alpha"], p["mu"], QuadraticVariant::Exponential);
    if (name == "GR-Q2") return growth_quadratic(p["alpha"], p["mu"], QuadraticVariant::Gaussian);
    if (name == "FISHER-N") {
        const double sf = p["sign"];
        if (sf != 1.0 && sf != -1.0)
            throw ParamConstraintViolation("sign", "sign in {+, -}",
                                           "fisher_scaling: sign must be + or -");
        return fisher_scaling(p["n"], p["mu"], p["beta"], p["C"], static_cast<int>(sf));
    }
    throw UnknownSystemError("unknown system: " + name);
}

} // namespace rdsim
