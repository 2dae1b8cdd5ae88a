#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rdsim/system.hpp"

namespace rdsim {

// Invariance of the three fields under the one-parameter stretching
//     x -> eps^alpha x,  t -> eps t,  W -> eps^mu W,
// under which D picks up eps^(2*alpha-1) and f picks up eps^(mu-1).
// Returns the largest defect ratio
//     |F(eps^alpha x, eps t) - eps^k F(x, t)| / max(|.|, 1e-300)
// over the samples and the three fields (D and f composed through W where
// they depend on it).  For eps = 1 the two evaluations coincide bit for bit,
// so the result is exactly 0.
inline double check_scale_invariance(const AnalyticRDSystem& sys, double eps,
                                     const std::vector<std::pair<double, double>>& samples) {
    if (!(eps > 0)) throw DomainError("scale factor must be positive");
    const double alpha = sys.exponents.alpha;
    const double mu = sys.exponents.mu;
    const hp e = eps;
    const hp ex = std::pow(e, static_cast<hp>(alpha));

    auto defect = [](hp lhs, hp rhs) {
        const hp scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300L});
        return static_cast<double>(std::fabs(lhs - rhs) / scale);
    };

    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto [x, t] = samples[i];
        if (!(t > 0) || !sys.in_domain(x))
            throw DomainError("sample point " + std::to_string(i) + " outside domain");
        const hp xs = ex * static_cast<hp>(x);
        const hp ts = e * static_cast<hp>(t);

        worst = std::max(worst, defect(sys.W(xs, ts),
                                       std::pow(e, static_cast<hp>(mu)) * sys.W(x, t)));
        worst = std::max(worst, defect(sys.D_xt(xs, ts),
                                       std::pow(e, static_cast<hp>(2 * alpha - 1)) * sys.D_xt(x, t)));
        worst = std::max(worst, defect(sys.f_xt(xs, ts),
                                       std::pow(e, static_cast<hp>(mu - 1)) * sys.f_xt(x, t)));
    }
    return worst;
}

// Deterministic sample cloud inside the system's verification window (and
// inside the support, where one exists).
inline std::vector<std::pair<double, double>> default_scale_samples(const AnalyticRDSystem& sys,
                                                                    int count, unsigned seed = 12345) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ut(sys.windows.t_lo, sys.windows.t_hi);
    std::uniform_real_distribution<double> uxu(sys.windows.x_lo, sys.windows.x_hi);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(count);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    while (static_cast<int>(pts.size()) < count) {
        const double t = ut(rng);
        const double x = sys.support_radius
                             ? 0.9 * static_cast<double>((*sys.support_radius)(t)) * unit(rng)
                             : uxu(rng);
        if (!sys.in_domain(x)) continue;
        pts.emplace_back(x, t);
    }
    return pts;
}

} // namespace rdsim
