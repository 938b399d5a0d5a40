#pragma once

#include <functional>

#include "swkb/errors.hpp"

namespace swkb {

struct QuadratureSpec {
    double lo = 0.0;
    double hi = 1.0;
    double target_abs_tol = 1e-11;
    int max_order = 1 << 14;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Integrates f over [lo, hi] for integrands that vanish like a square root
// at both endpoints (or diverge no worse than 1/sqrt there).
//
// The substitution t = m + h*cos(theta) turns the square-root endpoint
// behaviour into a smooth periodic integrand in theta, which an
// equally-weighted midpoint rule integrates with spectral accuracy.
// The node count doubles until two successive estimates differ by less
// than target_abs_tol; the last difference is returned as the error
// estimate. Endpoints themselves are never sampled.
QuadratureResult integrate_sqrt_endpoints(const std::function<double(double)>& f,
                                          const QuadratureSpec& q);

struct RootSpec {
    double lo = 0.0;
    double hi = 1.0;
    double tol_x = 1e-12;
    double tol_f = 1e-12;
    int max_iter = 200;
};

// Brent's method: bracketing, never leaves [lo, hi], superlinear on smooth g.
// Requires g(lo)*g(hi) <= 0.
double find_root(const std::function<double(double)>& g, const RootSpec& r);

}  // namespace swkb
