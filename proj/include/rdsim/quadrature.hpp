#pragma once

#include <cmath>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "rdsim/errors.hpp"
#include "rdsim/scaling.hpp"

namespace rdsim {

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0; // conservative bound from the embedded rule
    int intervals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr hp kronrod_abscissae[8] = {
    0.991455371120812639206854697526329L,
    0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L,
    0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L,
    0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L,
    0.000000000000000000000000000000000L,
};

inline constexpr hp kronrod_weights[8] = {
    0.022935322010529224963732008058970L,
    0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L,
    0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L,
    0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L,
    0.209482141084727828012999174891714L,
};

inline constexpr hp gauss_weights[4] = {
    0.129484966168869693270611432679082L,
    0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L,
    0.417959183673469387755102040816327L,
};

struct Panel {
    hp a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_15(F&& f, hp a, hp b) {
    const hp c = 0.5L * (a + b);
    const hp h = 0.5L * (b - a);
    hp kronrod = 0.0L, gauss = 0.0L;
    for (int i = 0; i < 8; ++i) {
        const hp dx = h * kronrod_abscissae[i];
        const hp fl = f(c - dx);
        const hp fr = (i == 7) ? fl : f(c + dx);
        const hp both = (i == 7) ? fl : fl + fr;
        kronrod += kronrod_weights[i] * both;
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * both;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * h;
    const hp diff = std::fabs((kronrod - gauss) * h);
    p.error = diff;
    return p;
}

} // namespace detail

// Globally adaptive bisection on the interval with the largest error estimate.
template <class F>
IntegralResult integrate(F&& f, hp a, hp b, double abs_tol = 1e-10, double rel_tol = 1e-8,
                         int max_intervals = 4000) {
    bool flipped = false;
    if (b < a) {
        std::swap(a, b);
        flipped = true;
    }
    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gauss_kronrod_15(f, a, b));
    hp total = panels.top().value;
    hp total_err = panels.top().error;
    int count = 1;
    while (total_err > std::max<hp>(abs_tol, rel_tol * std::fabs(total)) && count < max_intervals) {
        detail::Panel worst = panels.top();
        panels.pop();
        const hp mid = 0.5L * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // interval at rounding limit
            panels.push(worst);
            break;
        }
        auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    if (!std::isfinite(static_cast<double>(total)))
        throw NumericFailure("quadrature produced a non-finite value");
    IntegralResult r;
    r.value = static_cast<double>(flipped ? -total : total);
    r.error_estimate = static_cast<double>(total_err);
    r.intervals = count;
    return r;
}

} // namespace rdsim
