#ifndef NGSOR_NGSOR_HPP
#define NGSOR_NGSOR_HPP

// Umbrella header: Newton's method with banded-splitting stationary inner
// solvers (generalized Jacobi / Gauss-Seidel / SOR), benchmark problems,
// relaxation-parameter tuning, and the benchmark harness.

#include "ngsor/bench.hpp"
#include "ngsor/banded_splitting.hpp"
#include "ngsor/dense.hpp"
#include "ngsor/dense_lu.hpp"
#include "ngsor/errors.hpp"
#include "ngsor/newton.hpp"
#include "ngsor/omega_tuner.hpp"
#include "ngsor/problems.hpp"
#include "ngsor/spectral_radius.hpp"
#include "ngsor/stationary.hpp"

#endif // NGSOR_NGSOR_HPP
