#pragma once

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "rdsim/numerics.hpp"
#include "rdsim/system.hpp"

namespace rdsim {

enum class DerivativeMode {
    Auto,             // analytic when the profile carries derivatives, else FD
    Analytic,         // require analytic derivatives
    FiniteDifference, // force the difference quotients (independent oracle)
};

struct ResidualOptions {
    DerivativeMode mode = DerivativeMode::Auto;
    int richardson = 1;     // extrapolation steps on the central quotients (0..2)
    double rel_step = 1e-4; // h = rel_step * max(1, |coordinate|); h_t = rel_step * t
};

struct ResidualReport {
    double max_abs = 0.0;
    double l2 = 0.0; // root mean square over evaluated samples
    int n_samples = 0;
    std::vector<double> step_sizes;
    std::string method;
    int skipped = 0; // samples dropped by the boundary/support margin
};

namespace detail {

inline bool use_analytic(const Profile& y, DerivativeMode mode) {
    switch (mode) {
    case DerivativeMode::Auto: return y.has_analytic_derivatives();
    case DerivativeMode::Analytic:
        if (!y.has_analytic_derivatives())
            throw ContractError("analytic derivatives requested but not available");
        return true;
    case DerivativeMode::FiniteDifference: return false;
    }
    return false;
}

inline const char* method_name(bool analytic) {
    return analytic ? "analytic-derivative" : "central-difference-richardson";
}

// z-interval on which reduced profiles may be sampled: the spatial domain
// mapped to z, shrunk to the open support for compactly supported systems.
inline void z_bounds(const AnalyticRDSystem& sys, double& lo, double& hi) {
    lo = -std::numeric_limits<double>::infinity();
    hi = std::numeric_limits<double>::infinity();
    if (sys.domain == SpatialDomain::HalfLineNonNegative) lo = 0.0;
    if (sys.domain == SpatialDomain::HalfLineNonPositive) hi = 0.0;
    if (sys.support_radius) {
        const double edge = static_cast<double>((*sys.support_radius)(1.0L));
        lo = std::max(lo, -edge);
        hi = std::min(hi, edge);
    }
}

inline void accumulate(ResidualReport& rep, double r) {
    rep.max_abs = std::max(rep.max_abs, std::fabs(r));
    rep.l2 += r * r;
    ++rep.n_samples;
}

inline void finish(ResidualReport& rep) {
    rep.l2 = rep.n_samples ? std::sqrt(rep.l2 / rep.n_samples) : 0.0;
}

} // namespace detail

// Residual of the reduced equation
//     d/dz (rho y') + alpha z y' - mu y + sigma = 0
// at the given z samples.  Samples whose 10-step difference stencil would
// cross a domain endpoint or support edge are skipped and counted.
inline ResidualReport ode_residual(const AnalyticRDSystem& sys, const std::vector<double>& z_samples,
                                   ResidualOptions opts = {}) {
    const bool analytic = detail::use_analytic(sys.y, opts.mode);
    const double alpha = sys.exponents.alpha;
    const double mu = sys.exponents.mu;
    double lo, hi;
    detail::z_bounds(sys, lo, hi);

    ResidualReport rep;
    rep.method = detail::method_name(analytic);
    for (double zd : z_samples) {
        const hp z = zd;
        const hp h = scaled_step(z, opts.rel_step);
        if (zd - 10 * static_cast<double>(h) < lo || zd + 10 * static_cast<double>(h) > hi) {
            ++rep.skipped;
            continue;
        }
        if (rep.step_sizes.empty()) rep.step_sizes.push_back(static_cast<double>(h));

        hp yp, ypp;
        if (analytic) {
            yp = sys.y.d1(z);
            ypp = sys.y.d2(z);
        } else {
            yp = central_d1(sys.y.value, z, h, opts.richardson);
            ypp = central_d2(sys.y.value, z, h, opts.richardson);
        }
        const hp rp = sys.rho.derivative(z, opts.richardson);
        const hp r = rp * yp + sys.rho(z) * ypp + static_cast<hp>(alpha) * z * yp -
                     static_cast<hp>(mu) * sys.y(z) + sys.sigma(z);
        if (!std::isfinite(static_cast<double>(r)))
            throw NumericFailure("ode_residual: non-finite value at z = " + std::to_string(zd));
        detail::accumulate(rep, static_cast<double>(r));
    }
    detail::finish(rep);
    return rep;
}

// Residual of the first integral  rho y' + alpha z y - tau = 0, defined only
// for the conserving family (mu = -alpha).
inline ResidualReport first_integral_residual(const AnalyticRDSystem& sys,
                                              const std::vector<double>& z_samples,
                                              ResidualOptions opts = {}) {
    if (!sys.conserving() || !sys.tau)
        throw ContractError("first integral requires mu = -alpha");
    const bool analytic = detail::use_analytic(sys.y, opts.mode);
    const double alpha = sys.exponents.alpha;
    double lo, hi;
    detail::z_bounds(sys, lo, hi);

    ResidualReport rep;
    rep.method = detail::method_name(analytic);
    for (double zd : z_samples) {
        const hp z = zd;
        const hp h = scaled_step(z, opts.rel_step);
        if (zd - 10 * static_cast<double>(h) < lo || zd + 10 * static_cast<double>(h) > hi) {
            ++rep.skipped;
            continue;
        }
        if (rep.step_sizes.empty()) rep.step_sizes.push_back(static_cast<double>(h));
        const hp yp = analytic ? sys.y.d1(z) : central_d1(sys.y.value, z, h, opts.richardson);
        const hp r = sys.rho(z) * yp + static_cast<hp>(alpha) * z * sys.y(z) - (*sys.tau)(z);
        if (!std::isfinite(static_cast<double>(r)))
            throw NumericFailure("first_integral_residual: non-finite value at z = " +
                                 std::to_string(zd));
        detail::accumulate(rep, static_cast<double>(r));
    }
    detail::finish(rep);
    return rep;
}

// Residual of the full PDE,  W_t - d/dx(D W_x) - f,  evaluated from the
// closed-form fields by nested Richardson-extrapolated central differences
// (flux form).  W-dependent coefficients are composed through W(x,t).
inline ResidualReport pde_residual(const AnalyticRDSystem& sys,
                                   const std::vector<std::pair<double, double>>& xt_samples,
                                   ResidualOptions opts = {}) {
    ResidualReport rep;
    rep.method = "central-difference-richardson";

    for (const auto& [xd, td] : xt_samples) {
        if (!(td > 0)) throw DomainError("similarity variable undefined at t <= 0");
        const hp x = xd, t = td;
        const hp hx = scaled_step(x, opts.rel_step);
        const hp ht = opts.rel_step * t;

        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        if (sys.domain == SpatialDomain::HalfLineNonNegative) lo = 0.0;
        if (sys.domain == SpatialDomain::HalfLineNonPositive) hi = 0.0;
        if (sys.support_radius) {
            // support shrinks toward t - ht within the time stencil
            const double edge = static_cast<double>((*sys.support_radius)(t - ht));
            lo = std::max(lo, -edge);
            hi = std::min(hi, edge);
        }
        if (xd - 10 * static_cast<double>(hx) < lo || xd + 10 * static_cast<double>(hx) > hi) {
            ++rep.skipped;
            continue;
        }
        if (rep.step_sizes.empty()) {
            rep.step_sizes.push_back(static_cast<double>(hx));
            rep.step_sizes.push_back(static_cast<double>(ht));
        }

        auto flux = [&](hp xi) {
            const hp wx = central_d1([&](hp q) { return sys.W(q, t); }, xi, hx, opts.richardson);
            return sys.D_xt(xi, t) * wx;
        };
        const hp wt = central_d1([&](hp q) { return sys.W(x, q); }, t, ht, opts.richardson);
        const hp div = central_d1(flux, x, hx, opts.richardson);
        const hp r = wt - div - sys.f_xt(x, t);
        if (!std::isfinite(static_cast<double>(r)))
            throw NumericFailure("pde_residual: non-finite value at (x, t) = (" +
                                 std::to_string(xd) + ", " + std::to_string(td) + ")");
        detail::accumulate(rep, static_cast<double>(r));
    }
    detail::finish(rep);
    return rep;
}

// Uniformly spaced z samples over the system's documented window.
inline std::vector<double> default_z_samples(const AnalyticRDSystem& sys, int count = 300) {
    std::vector<double> z(count);
    const double lo = sys.windows.z_lo, hi = sys.windows.z_hi;
    for (int i = 0; i < count; ++i) z[i] = lo + (hi - lo) * i / (count - 1);
    return z;
}

// Deterministic (x, t) cloud in the documented verification box, kept inside
// the support where one exists.
inline std::vector<std::pair<double, double>> default_xt_samples(const AnalyticRDSystem& sys,
                                                                 int count = 300,
                                                                 unsigned seed = 98765) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ut(sys.windows.t_lo, sys.windows.t_hi);
    std::uniform_real_distribution<double> ux(sys.windows.x_lo, sys.windows.x_hi);
    std::uniform_real_distribution<double> unit(-0.9, 0.9);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(count);
    while (static_cast<int>(pts.size()) < count) {
        const double t = ut(rng);
        const double x = sys.support_radius
                             ? static_cast<double>((*sys.support_radius)(t)) * unit(rng)
                             : ux(rng);
        if (!sys.in_domain(x)) continue;
        pts.emplace_back(x, t);
    }
    return pts;
}

} // namespace rdsim
