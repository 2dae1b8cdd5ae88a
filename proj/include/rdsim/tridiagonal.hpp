#pragma once

#include <cstddef>
#include <vector>

#include "rdsim/errors.hpp"

namespace rdsim {

// Thomas algorithm for a tridiagonal system.  `lower[0]` and `upper[n-1]` are
// ignored.  No pivoting: intended for the diagonally dominant matrices the
// time stepper assembles.
inline std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                             const std::vector<double>& diag,
                                             const std::vector<double>& upper,
                                             const std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    std::vector<double> c_star(n), d_star(n), x(n);
    c_star[0] = upper[0] / diag[0];
    d_star[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double m = diag[i] - lower[i] * c_star[i - 1];
        c_star[i] = upper[i] / m;
        d_star[i] = (rhs[i] - lower[i] * d_star[i - 1]) / m;
    }
    x[n - 1] = d_star[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d_star[i] - c_star[i] * x[i + 1];
    return x;
}

} // namespace rdsim
