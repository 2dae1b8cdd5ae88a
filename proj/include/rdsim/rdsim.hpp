#pragma once

// Umbrella header: similarity-reduction machinery for reaction-diffusion
// equations W_t = (D W_x)_x + f, the catalog of exactly solvable systems,
// and the numerical oracles that verify them.

#include "rdsim/catalog.hpp"
#include "rdsim/conservation.hpp"
#include "rdsim/domain.hpp"
#include "rdsim/errors.hpp"
#include "rdsim/grid.hpp"
#include "rdsim/io.hpp"
#include "rdsim/numerics.hpp"
#include "rdsim/profile.hpp"
#include "rdsim/quadrature.hpp"
#include "rdsim/residual.hpp"
#include "rdsim/scale_check.hpp"
#include "rdsim/scaling.hpp"
#include "rdsim/solver.hpp"
#include "rdsim/system.hpp"
#include "rdsim/tridiagonal.hpp"
