#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "swkb/errors.hpp"

// Catalog of primary translationally shape-invariant potentials.
//
// Units: hbar = 2m = 1 throughout. Every catalog potential is normalized to
// a zero-energy ground state. Each potential reduces, under a monotone
// change of variable y(x), to one of two canonical forms:
//
//   first category:   V(y) = lambda2*y^2 + lambda1*y + lambda0
//   second category:  V(y) = lambda2*y^2 + mu2/y^2   + lambda0
//
// with y'(x) = alpha_eff*(1 + y^2) (tan-like maps), alpha_eff*(1 - y^2)
// (tanh-like maps, |y| < 1), or alpha_eff*(y^2 - 1) (coth-like maps,
// y < -1; used by Eckart). The superpotential is W = a*y + b (first
// category) or W = a*y - b/y (second category). Four potentials (harmonic,
// Morse, Kepler-Coulomb, isotonic) do not fit the generic scheme and carry
// their own parameter bundles.

namespace swkb {

enum class PotentialId {
    RosenMorseI,
    RosenMorseII,
    Eckart,
    PoschlTeller,
    PoschlTellerI,
    PoschlTellerII,
    ScarfI,
    Harmonic,
    Morse,
    KeplerCoulomb,
    Isotonic,
    GenericFirst,
    GenericSecond,
};

enum class MapSign { Plus, Minus };

// The three realizations of y'(x) = alpha*(1 +/- y^2). CothLike is the
// minus branch continued to |y| > 1 (y = -coth), where y' = alpha*(y^2-1).
enum class VariableMapKind { TanLike, TanhLike, CothLike };

enum class Category {
    FirstCategory,
    SecondCategory,
    ExceptionalHarmonic,
    ExceptionalMorse,
    ExceptionalCoulomb,
    ExceptionalIsotonic,
};

struct Params {
    double A = 0.0;
    double B = 0.0;
    double alpha = 0.0;
    double omega = 0.0;
    double l = 0.0;
    double g = 0.0;  // Coulomb strength
    // generic-slot canonical coefficients
    double lambda2 = 0.0;
    double lambda1 = 0.0;
    double mu2 = 0.0;
    double lambda0 = 0.0;
    MapSign map_sign = MapSign::Plus;
};

class PotentialSpec {
public:
    static PotentialSpec rosen_morse_1(double A, double B, double alpha);
    static PotentialSpec rosen_morse_2(double A, double B, double alpha);
    static PotentialSpec eckart(double A, double B, double alpha);
    static PotentialSpec poschl_teller(double A, double B, double alpha);
    static PotentialSpec poschl_teller_1(double A, double B, double alpha);
    static PotentialSpec poschl_teller_2(double A, double B, double alpha);
    static PotentialSpec scarf_1(double A, double B, double alpha);
    static PotentialSpec harmonic(double omega);
    static PotentialSpec morse(double A, double B, double alpha);
    static PotentialSpec kepler_coulomb(double g, double l);
    static PotentialSpec isotonic(double omega, double l);
    static PotentialSpec generic_first(double lambda2, double lambda1, double lambda0,
                                       double alpha, MapSign sign);
    static PotentialSpec generic_second(double lambda2, double mu2, double lambda0,
                                        double alpha, MapSign sign);

    PotentialId id() const { return id_; }
    const Params& params() const { return p_; }

private:
    PotentialSpec(PotentialId id, Params p);
    void validate() const;

    PotentialId id_;
    Params p_;
};

struct FirstCategoryForm {
    double lambda2 = 0.0;
    double lambda1 = 0.0;
    double lambda0 = 0.0;
    double alpha_eff = 0.0;
    VariableMapKind map_kind = VariableMapKind::TanLike;
    double x_offset = 0.0;  // tan-like maps: y = tan(alpha_eff*(x - x_offset))
};

struct SecondCategoryForm {
    double lambda2 = 0.0;
    double mu2 = 0.0;
    double lambda0 = 0.0;
    double alpha_eff = 0.0;
    VariableMapKind map_kind = VariableMapKind::TanLike;  // canonical variable z = y^2
};

struct HarmonicForm {
    double omega = 0.0;
};

struct MorseForm {
    double A = 0.0, B = 0.0, alpha = 0.0;
};

struct CoulombForm {
    double g = 0.0, l = 0.0;
    double a = 0.0;  // l + 1
    double b = 0.0;  // g / (2(l+1)); the unique value satisfying W^2 - W' = V - E0
};

struct IsotonicForm {
    double omega = 0.0, l = 0.0;
    double a = 0.0;  // omega / 2
    double b = 0.0;  // l + 1
};

using CanonicalForm = std::variant<FirstCategoryForm, SecondCategoryForm, HarmonicForm,
                                   MorseForm, CoulombForm, IsotonicForm>;

Category category_of(const CanonicalForm& form);
Category category_of(const PotentialSpec& spec);

// mapSign as seen from y' = alpha*(1 +/- y^2): tan-like -> Plus, else Minus.
MapSign map_sign_of(VariableMapKind kind);

struct SuperpotentialCoeffs {
    double a = 0.0;
    double b = 0.0;
};

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

constexpr int unbounded_levels = std::numeric_limits<int>::max();

// --- operations -----------------------------------------------------------

// V(x) from the raw definition. Throws DomainError outside the natural domain.
double evaluate_potential(const PotentialSpec& spec, double x);

struct VariableMapValue {
    double y = 0.0;
    double dy_dx = 0.0;
};

// (y(x), y'(x)) for the potential's canonical variable.
VariableMapValue evaluate_variable_map(const PotentialSpec& spec, double x);

CanonicalForm canonical_form(const PotentialSpec& spec);

// Superpotential coefficients (a, b) from the canonical coefficients:
// a*(a -/+ alpha_eff) = lambda2 and, in the second category,
// b*(b - alpha_eff) = mu2.
SuperpotentialCoeffs superpotential_coeffs(const CanonicalForm& form);

// E0 = lambda0 + alpha_eff*a - b^2 (first category; coth-like maps flip the
// sign of the alpha term), E0 = lambda0 + 2ab + alpha_eff*(a +/- b) (second
// category), 0 for the exceptional potentials.
double ground_state_energy(const CanonicalForm& form, const SuperpotentialCoeffs& c);
double ground_state_energy(const PotentialSpec& spec);

double evaluate_superpotential(const PotentialSpec& spec, double x);

// Analytic dW/dx via the chain rule through the variable map.
double superpotential_derivative(const PotentialSpec& spec, double x);

// W^2 - W' - (V - E0); vanishes identically for a correct catalog entry.
double riccati_residual(const PotentialSpec& spec, double x);

// Canonical-form evaluation V(y(x)); equals evaluate_potential on the
// natural domain (reconstruction identity).
double evaluate_potential_canonical(const PotentialSpec& spec, double x);

// E_n from the per-potential closed form (zero ground state).
double closed_form_level(const PotentialSpec& spec, int n);

// E_n from the category master formula; agrees with closed_form_level.
double master_form_level(const PotentialSpec& spec, int n);

// Lowest asymptotic value of V (+inf for confining potentials).
double continuum_threshold(const PotentialSpec& spec);

// Number of bound levels, or unbounded_levels.
int level_count(const PotentialSpec& spec);

// Natural domain of x (open interval; infinite ends where unbounded).
Interval natural_domain(const PotentialSpec& spec);

// A window inside the natural domain where |V| stays moderate; used for
// residual grids so absolute tolerances are not swamped by wall values.
Interval sample_window(const PotentialSpec& spec);

// x(y): analytic inverse of the variable map (u is y for the first
// category, z = y^2 for the second, and the natural variable otherwise).
double invert_variable_map(const PotentialSpec& spec, double u);

// --- catalog metadata ------------------------------------------------------

struct PotentialInfo {
    PotentialId id;
    const char* cli_name;
    const char* display_name;
    const char* category;    // "first", "second", "first/exceptional", ...
    const char* parameters;  // e.g. "A, B, alpha"
    const char* constraints;
    const char* spectrum;  // closed-form E_n expression
};

const std::vector<PotentialInfo>& catalog_info();

// The documented reference parameter set for each catalog potential.
PotentialSpec reference_spec(PotentialId id);
std::vector<PotentialSpec> reference_specs();

std::string potential_name(PotentialId id);

}  // namespace swkb
