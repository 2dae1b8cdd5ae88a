#pragma once

#include <vector>

#include "rdsim/errors.hpp"

namespace rdsim {

// Uniform 1-D node grid: n_cells intervals, n_cells + 1 nodes.
struct Grid1D {
    double x_min;
    double x_max;
    int n_cells;

    Grid1D(double xmin, double xmax, int cells) : x_min(xmin), x_max(xmax), n_cells(cells) {
        if (!(x_min < x_max)) throw DomainError("grid requires x_min < x_max");
        if (n_cells < 16) throw DomainError("grid requires n_cells >= 16");
    }

    double dx() const { return (x_max - x_min) / n_cells; }
    int n_nodes() const { return n_cells + 1; }
    double x(int i) const { return x_min + i * dx(); }

    std::vector<double> nodes() const {
        std::vector<double> xs(n_nodes());
        for (int i = 0; i < n_nodes(); ++i) xs[i] = x(i);
        return xs;
    }
};

// Grid plus nodal solution values at one time level.
struct NumericField {
    Grid1D grid;
    double t;
    std::vector<double> values;
};

// Composite trapezoid of nodal values.
inline double trapezoid_mass(const Grid1D& grid, const std::vector<double>& values) {
    double s = 0.0;
    for (int i = 0; i + 1 < grid.n_nodes(); ++i) s += 0.5 * (values[i] + values[i + 1]);
    return s * grid.dx();
}

} // namespace rdsim
