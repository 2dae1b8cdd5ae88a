#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "rdsim/scaling.hpp"

namespace rdsim {

// Central differences with Richardson extrapolation.  The base quotient is
// O(h^2); each extrapolation step over the [h, h/2, h/4, ...] ladder removes
// the leading even error term, so `steps` extrapolations give order
// 2*(steps+1).  steps is clamped to [0, 2].

namespace detail {

inline int clamp_richardson(int steps) { return std::max(0, std::min(2, steps)); }

inline hp extrapolate(std::array<hp, 3>& d, int n) {
    hp fac = 4.0L;
    for (int k = 1; k < n; ++k) {
        for (int i = n - 1; i >= k; --i) d[i] = (fac * d[i] - d[i - 1]) / (fac - 1.0L);
        fac *= 4.0L;
    }
    return d[n - 1];
}

} // namespace detail

template <class F>
hp central_d1(F&& f, hp x, hp h, int richardson_steps = 1) {
    const int n = detail::clamp_richardson(richardson_steps) + 1;
    std::array<hp, 3> d{};
    for (int i = 0; i < n; ++i) {
        const hp hi = h / static_cast<hp>(1 << i);
        d[i] = (f(x + hi) - f(x - hi)) / (2.0L * hi);
    }
    return detail::extrapolate(d, n);
}

template <class F>
hp central_d2(F&& f, hp x, hp h, int richardson_steps = 1) {
    const int n = detail::clamp_richardson(richardson_steps) + 1;
    const hp fx = f(x);
    std::array<hp, 3> d{};
    for (int i = 0; i < n; ++i) {
        const hp hi = h / static_cast<hp>(1 << i);
        d[i] = (f(x + hi) - 2.0L * fx + f(x - hi)) / (hi * hi);
    }
    return detail::extrapolate(d, n);
}

// Step scaled to the local magnitude of the abscissa: h = base * max(1, |v|).
inline hp scaled_step(hp v, hp base = 1e-4L) {
    return base * std::max<hp>(1.0L, std::fabs(v));
}

// Least-squares slope of y against x.
inline double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

} // namespace rdsim
