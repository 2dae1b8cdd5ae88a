#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rdsim/grid.hpp"
#include "rdsim/numerics.hpp"
#include "rdsim/system.hpp"
#include "rdsim/tridiagonal.hpp"

namespace rdsim {

enum class BoundaryRule {
    AnalyticDirichlet,    // pin boundary nodes to the closed-form solution
    HomogeneousDirichlet, // pin boundary nodes to zero (mass bookkeeping tests)
};

struct SolverConfig {
    double theta = 0.5; // 0 explicit, 0.5 Crank-Nicolson, 1 backward Euler
    double dt = 1e-3;
    double t_start = 1.0;
    double t_end = 2.0;
    BoundaryRule boundary = BoundaryRule::AnalyticDirichlet;
    bool nonlinear_lag = true; // lag W-dependent coefficients one level (vs one Picard sweep)
};

struct ComparisonReport {
    double l2_relative = 0.0;
    double max_abs_error = 0.0;
    double t_end = 0.0;
    double mass_numeric = 0.0;
    double mass_analytic = 0.0;
};

struct ConvergenceLevel {
    double dx = 0.0;
    double dt = 0.0;
    double l2_error = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceLevel> levels;
    double order_space = 0.0;
    double order_time = 0.0;
    bool reliable = true;
    std::string note;
};

namespace detail {

inline void validate(const SolverConfig& cfg) {
    if (!(cfg.theta >= 0.0 && cfg.theta <= 1.0))
        throw ContractError("theta must lie in [0, 1]");
    if (!(cfg.dt > 0)) throw ContractError("dt must be positive");
    if (!(cfg.t_start > 0)) throw ContractError("t_start must be positive");
    if (!(cfg.t_end > cfg.t_start)) throw ContractError("t_end must exceed t_start");
    if (!(cfg.dt <= cfg.t_end - cfg.t_start + 1e-15))
        throw ContractError("dt must not exceed t_end - t_start");
}

} // namespace detail

// theta-scheme time integrator for W_t = d/dx(D W_x) + f in flux form.
//
// Diffusion uses face-centered coefficients D_{i+1/2} evaluated at the
// theta-weighted time level t + theta*dt, applied to the theta-blend of the
// old and new solution; this keeps Crank-Nicolson second order for
// time-dependent coefficients.  The reaction term stays on the right-hand
// side (no nonlinear solve) but is theta-weighted in time for the same
// reason; W-dependent coefficients use the lagged solution.
inline NumericField solve(const AnalyticRDSystem& sys, const Grid1D& grid, SolverConfig cfg) {
    detail::validate(cfg);

    const int n = grid.n_nodes();
    const double dx = grid.dx();
    std::vector<double> w(n), wnew(n);
    for (int i = 0; i < n; ++i)
        w[i] = static_cast<double>(sys.W(grid.x(i), cfg.t_start));

    std::vector<double> dface(n - 1), src(n);
    std::vector<double> sub(n - 2), diag(n - 2), sup(n - 2), rhs(n - 2);

    double t = cfg.t_start;
    long step = 0;
    while (t < cfg.t_end - 1e-12 * cfg.t_end) {
        const double h = std::min(cfg.dt, cfg.t_end - t);
        const double tnew = t + h;

        const int sweeps = cfg.nonlinear_lag ? 1 : 2;
        std::vector<double> wlag = w;
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            const double tcoef = t + cfg.theta * h;
            for (int i = 0; i < n - 1; ++i) {
                const double xm = 0.5 * (grid.x(i) + grid.x(i + 1));
                const double wm = 0.5 * (wlag[i] + wlag[i + 1]);
                const double d = static_cast<double>(sys.D(wm, xm, tcoef));
                if (d < 0.0) throw SolverAbort("non-parabolic coefficient sign", step);
                dface[i] = d;
            }
            for (int i = 0; i < n; ++i) {
                const double x = grid.x(i);
                src[i] = cfg.theta * static_cast<double>(sys.f(wlag[i], x, tnew)) +
                         (1.0 - cfg.theta) * static_cast<double>(sys.f(wlag[i], x, t));
            }

            wnew[0] = cfg.boundary == BoundaryRule::AnalyticDirichlet
                          ? static_cast<double>(sys.W(grid.x_min, tnew))
                          : 0.0;
            wnew[n - 1] = cfg.boundary == BoundaryRule::AnalyticDirichlet
                              ? static_cast<double>(sys.W(grid.x_max, tnew))
                              : 0.0;

            const double r = h / (dx * dx);
            for (int i = 1; i < n - 1; ++i) {
                const double dm = dface[i - 1], dp = dface[i];
                sub[i - 1] = -cfg.theta * r * dm;
                diag[i - 1] = 1.0 + cfg.theta * r * (dm + dp);
                sup[i - 1] = -cfg.theta * r * dp;
                rhs[i - 1] = w[i] +
                             (1.0 - cfg.theta) * r *
                                 (dp * (w[i + 1] - w[i]) - dm * (w[i] - w[i - 1])) +
                             h * src[i];
            }
            rhs[0] += cfg.theta * r * dface[0] * wnew[0];
            rhs[n - 3] += cfg.theta * r * dface[n - 2] * wnew[n - 1];

            const std::vector<double> interior = solve_tridiagonal(sub, diag, sup, rhs);
            for (int i = 1; i < n - 1; ++i) wnew[i] = interior[i - 1];
            wlag = wnew;
        }

        for (int i = 0; i < n; ++i) {
            if (!std::isfinite(wnew[i]))
                throw SolverAbort("non-finite value at node " + std::to_string(i), step);
        }
        w = wnew;
        t = tnew;
        ++step;
    }
    return NumericField{grid, t, w};
}

inline ComparisonReport compare_to_analytic(const NumericField& numeric,
                                            const AnalyticRDSystem& sys) {
    if (!(numeric.t > 0)) throw DomainError("similarity variable undefined at t <= 0");
    const int n = numeric.grid.n_nodes();
    std::vector<double> exact(n);
    for (int i = 0; i < n; ++i)
        exact[i] = static_cast<double>(sys.W(numeric.grid.x(i), numeric.t));

    double num2 = 0.0, den2 = 0.0;
    ComparisonReport rep;
    rep.t_end = numeric.t;
    for (int i = 0; i < n; ++i) {
        const double e = numeric.values[i] - exact[i];
        num2 += e * e;
        den2 += exact[i] * exact[i];
        rep.max_abs_error = std::max(rep.max_abs_error, std::fabs(e));
    }
    rep.l2_relative = den2 > 0 ? std::sqrt(num2 / den2) : std::sqrt(num2);
    rep.mass_numeric = trapezoid_mass(numeric.grid, numeric.values);
    rep.mass_analytic = trapezoid_mass(numeric.grid, exact);
    return rep;
}

// Joint space/time refinement study.  dt is halved with dx for theta = 0.5
// (both error terms second order) and quartered otherwise so the first-order
// time error refines like the second-order space error.
inline ConvergenceReport convergence_study(const AnalyticRDSystem& sys, const Grid1D& base_grid,
                                           const SolverConfig& base_config, int levels = 4) {
    if (levels < 3) throw ContractError("convergence study needs at least 3 levels");
    const double time_factor = base_config.theta == 0.5 ? 2.0 : 4.0;

    ConvergenceReport rep;
    std::vector<double> ldx, ldt, lerr;
    for (int k = 0; k < levels; ++k) {
        Grid1D grid(base_grid.x_min, base_grid.x_max, base_grid.n_cells << k);
        SolverConfig cfg = base_config;
        cfg.dt = base_config.dt / std::pow(time_factor, k);
        const ComparisonReport cmp = compare_to_analytic(solve(sys, grid, cfg), sys);
        rep.levels.push_back({grid.dx(), cfg.dt, cmp.l2_relative});
        ldx.push_back(std::log(grid.dx()));
        ldt.push_back(std::log(cfg.dt));
        lerr.push_back(std::log(cmp.l2_relative));
    }
    for (size_t k = 1; k < rep.levels.size(); ++k) {
        if (rep.levels[k].l2_error >= rep.levels[k - 1].l2_error) {
            rep.reliable = false;
            rep.note = "non-monotone error sequence; order unreliable";
        }
    }
    rep.order_space = fitted_slope(ldx, lerr);
    rep.order_time = fitted_slope(ldt, lerr);
    return rep;
}

} // namespace rdsim
