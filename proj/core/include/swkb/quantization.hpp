#pragma once

#include "swkb/catalog.hpp"
#include "swkb/numerics.hpp"

// SWKB and proper (Ma-Xu) quantization machinery.
//
//   I_SWKB(E) = integral of sqrt(E - E0 - W^2(x)) between the roots of
//               W^2 = E - E0; equals n*pi at the exact levels.
//   I_PQ(E)   = integral of sqrt(E - V(x)) between the classical turning
//               points; equals I_PQ(E0) + n*pi at the exact levels.
//
// Every action is available through three independent routes: the closed
// form assembled from the moment integrals below (production path), a
// quadrature of the reduced canonical-variable integral, and a quadrature
// of the raw x-space integrand.

namespace swkb {

enum class ActionKind { Swkb, Proper };
enum class ActionMethod { ClosedForm, CanonicalQuadrature, RawQuadrature };

struct TurningPoints {
    double x_left = 0.0;
    double x_right = 0.0;
    // canonical variable: y for the first category, z = y^2 for the second,
    // the natural variable for the exceptional potentials
    double u_left = 0.0;
    double u_right = 0.0;
    ActionKind kind = ActionKind::Swkb;
};

struct ActionValue {
    double value = 0.0;
    ActionMethod method = ActionMethod::ClosedForm;
    double error_estimate = 0.0;  // quadrature methods only
};

// Classical/SWKB turning points at energy E, computed in closed form from
// the underlying quadratic and mapped back to x analytically.
TurningPoints turning_points(const PotentialSpec& spec, double E, ActionKind kind);

// int_lo^hi sqrt((hi-y)(y-lo)) / (1 + y^2) dy        (sign = Plus)
// int_lo^hi sqrt((hi-y)(y-lo)) / (1 - y^2) dy        (sign = Minus, -1 < lo <= hi < 1)
double moment_integral_first(double lo, double hi, MapSign sign);

// int_lo^hi sqrt((hi-y)(y-lo)) / (y^2 - 1) dy        (lo <= hi < -1; coth-like maps)
double moment_integral_first_outer(double lo, double hi);

// int_lo^hi sqrt((hi-z)(z-lo)) / (z (1 + z)) dz      (sign = Plus, 0 < lo)
// int_lo^hi sqrt((hi-z)(z-lo)) / (z (1 - z)) dz      (sign = Minus, 0 < lo <= hi < 1)
double moment_integral_second(double lo, double hi, MapSign sign);

// int_lo^hi sqrt((hi-z)(z-lo)) / z dz = pi ((lo+hi)/2 - sqrt(lo*hi)), 0 <= lo
double moment_integral_inverse(double lo, double hi);

ActionValue swkb_action(const PotentialSpec& spec, double E, ActionMethod method);
ActionValue pq_action(const PotentialSpec& spec, double E, ActionMethod method);

// The Ma-Xu correction gamma = I_PQ(E0) in closed form.
double pq_ground_closed(const PotentialSpec& spec);

// I_SWKB(E) - I_PQ(E) + I_PQ(E0), every term by raw quadrature. Zero (to
// quadrature accuracy) for every catalog potential at every E in range.
double equivalence_residual(const PotentialSpec& spec, double E);

// Energies closer to E0 than this are treated as the degenerate SWKB case.
constexpr double degenerate_energy_window = 1e-9;

}  // namespace swkb
