#pragma once

// Umbrella header: exact-arithmetic solvers for the linear matrix
// equation A*X*B = C and its relatives.

#include "axbsolve/affine_map.hpp"
#include "axbsolve/equation.hpp"
#include "axbsolve/matrix.hpp"
#include "axbsolve/matrix_io.hpp"
#include "axbsolve/one_inverse.hpp"
#include "axbsolve/solve.hpp"
#include "axbsolve/structural.hpp"
#include "axbsolve/systems.hpp"
