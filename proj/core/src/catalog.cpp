#include "swkb/catalog.hpp"

#include <cmath>
#include <sstream>

namespace swkb {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void fail_param(const std::string& msg) { throw ParamError(msg); }

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

// --- construction -----------------------------------------------------------

PotentialSpec::PotentialSpec(PotentialId id, Params p) : id_(id), p_(p) { validate(); }

PotentialSpec PotentialSpec::rosen_morse_1(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::RosenMorseI, p);
}
PotentialSpec PotentialSpec::rosen_morse_2(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::RosenMorseII, p);
}
PotentialSpec PotentialSpec::eckart(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::Eckart, p);
}
PotentialSpec PotentialSpec::poschl_teller(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::PoschlTeller, p);
}
PotentialSpec PotentialSpec::poschl_teller_1(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::PoschlTellerI, p);
}
PotentialSpec PotentialSpec::poschl_teller_2(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::PoschlTellerII, p);
}
PotentialSpec PotentialSpec::scarf_1(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::ScarfI, p);
}
PotentialSpec PotentialSpec::harmonic(double omega) {
    Params p;
    p.omega = omega;
    return PotentialSpec(PotentialId::Harmonic, p);
}
PotentialSpec PotentialSpec::morse(double A, double B, double alpha) {
    Params p;
    p.A = A; p.B = B; p.alpha = alpha;
    return PotentialSpec(PotentialId::Morse, p);
}
PotentialSpec PotentialSpec::kepler_coulomb(double g, double l) {
    Params p;
    p.g = g; p.l = l;
    return PotentialSpec(PotentialId::KeplerCoulomb, p);
}
PotentialSpec PotentialSpec::isotonic(double omega, double l) {
    Params p;
    p.omega = omega; p.l = l;
    return PotentialSpec(PotentialId::Isotonic, p);
}
PotentialSpec PotentialSpec::generic_first(double lambda2, double lambda1, double lambda0,
                                           double alpha, MapSign sign) {
    Params p;
    p.lambda2 = lambda2; p.lambda1 = lambda1; p.lambda0 = lambda0;
    p.alpha = alpha; p.map_sign = sign;
    return PotentialSpec(PotentialId::GenericFirst, p);
}
PotentialSpec PotentialSpec::generic_second(double lambda2, double mu2, double lambda0,
                                            double alpha, MapSign sign) {
    Params p;
    p.lambda2 = lambda2; p.mu2 = mu2; p.lambda0 = lambda0;
    p.alpha = alpha; p.map_sign = sign;
    return PotentialSpec(PotentialId::GenericSecond, p);
}

void PotentialSpec::validate() const {
    const Params& p = p_;
    auto need_alpha = [&] {
        if (!(p.alpha > 0.0)) fail_param("alpha must be positive (alpha=" + fmt(p.alpha) + ")");
    };
    switch (id_) {
        case PotentialId::RosenMorseI:
            need_alpha();
            if (!(p.A > 0.5 * p.alpha))
                fail_param("rosen-morse-1 requires A > alpha/2 (A=" + fmt(p.A) + ")");
            break;
        case PotentialId::RosenMorseII:
            need_alpha();
            if (!(p.A > 0.0)) fail_param("rosen-morse-2 requires A > 0");
            if (!(p.B > 0.0 && p.B < p.A * p.A))
                fail_param("rosen-morse-2 violates 0 < B < A^2 (A=" + fmt(p.A) +
                           ", B=" + fmt(p.B) + ")");
            break;
        case PotentialId::Eckart:
            need_alpha();
            if (!(p.A > 0.0)) fail_param("eckart requires A > 0");
            if (!(p.B > p.A * p.A))
                fail_param("eckart violates B > A^2 (A=" + fmt(p.A) + ", B=" + fmt(p.B) + ")");
            break;
        case PotentialId::PoschlTeller:
            need_alpha();
            if (!(p.A > 0.0 && p.B > p.A))
                fail_param("poschl-teller violates B > A > 0 (A=" + fmt(p.A) +
                           ", B=" + fmt(p.B) + ")");
            break;
        case PotentialId::PoschlTellerI:
            need_alpha();
            if (!(p.A > p.alpha && p.B > p.alpha))
                fail_param("poschl-teller-1 requires A > alpha and B > alpha");
            break;
        case PotentialId::PoschlTellerII:
            need_alpha();
            if (!(p.B > 0.0 && p.B < p.A))
                fail_param("poschl-teller-2 violates 0 < B < A (A=" + fmt(p.A) +
                           ", B=" + fmt(p.B) + ")");
            break;
        case PotentialId::ScarfI:
            need_alpha();
            if (!(p.B > 0.0 && p.B < p.A))
                fail_param("scarf-1 violates 0 < B < A (A=" + fmt(p.A) + ", B=" + fmt(p.B) + ")");
            break;
        case PotentialId::Harmonic:
            if (!(p.omega > 0.0)) fail_param("harmonic requires omega > 0");
            break;
        case PotentialId::Morse:
            need_alpha();
            if (!(p.A > 0.0 && p.B > 0.0))
                fail_param("morse requires A, B, alpha all positive");
            break;
        case PotentialId::KeplerCoulomb:
            if (!(p.g > 0.0)) fail_param("kepler-coulomb requires g > 0");
            if (!(p.l >= 0.0)) fail_param("kepler-coulomb requires l >= 0");
            break;
        case PotentialId::Isotonic:
            if (!(p.omega > 0.0)) fail_param("isotonic requires omega > 0");
            if (!(p.l >= 0.0)) fail_param("isotonic requires l >= 0");
            break;
        case PotentialId::GenericFirst:
            need_alpha();
            if (!(p.lambda2 > 0.0)) fail_param("generic-first requires lambda2 > 0");
            break;
        case PotentialId::GenericSecond:
            need_alpha();
            if (!(p.lambda2 > 0.0 && p.mu2 > 0.0))
                fail_param("generic-second requires lambda2 > 0 and mu2 > 0");
            break;
    }
}

// --- canonical forms --------------------------------------------------------

Category category_of(const CanonicalForm& form) {
    struct Visitor {
        Category operator()(const FirstCategoryForm&) const { return Category::FirstCategory; }
        Category operator()(const SecondCategoryForm&) const { return Category::SecondCategory; }
        Category operator()(const HarmonicForm&) const { return Category::ExceptionalHarmonic; }
        Category operator()(const MorseForm&) const { return Category::ExceptionalMorse; }
        Category operator()(const CoulombForm&) const { return Category::ExceptionalCoulomb; }
        Category operator()(const IsotonicForm&) const { return Category::ExceptionalIsotonic; }
    };
    return std::visit(Visitor{}, form);
}

Category category_of(const PotentialSpec& spec) { return category_of(canonical_form(spec)); }

MapSign map_sign_of(VariableMapKind kind) {
    return kind == VariableMapKind::TanLike ? MapSign::Plus : MapSign::Minus;
}

CanonicalForm canonical_form(const PotentialSpec& spec) {
    const Params& p = spec.params();
    const double A = p.A, B = p.B, al = p.alpha;
    switch (spec.id()) {
        case PotentialId::RosenMorseI: {
            // y = -cot(alpha x) = tan(alpha x - pi/2)
            FirstCategoryForm f;
            f.lambda2 = A * (A - al);
            f.lambda1 = -2.0 * B;
            f.lambda0 = B * B / (A * A) - al * A;
            f.alpha_eff = al;
            f.map_kind = VariableMapKind::TanLike;
            f.x_offset = 0.5 * kPi / al;
            if (!(f.lambda2 > 0.0))
                fail_param("rosen-morse-1 canonical form needs A > alpha (lambda2 <= 0)");
            return f;
        }
        case PotentialId::RosenMorseII: {
            FirstCategoryForm f;
            f.lambda2 = A * (A + al);
            f.lambda1 = 2.0 * B;
            f.lambda0 = B * B / (A * A) - al * A;
            f.alpha_eff = al;
            f.map_kind = VariableMapKind::TanhLike;
            return f;
        }
        case PotentialId::Eckart: {
            // y = -coth(alpha x), y' = alpha (y^2 - 1)
            FirstCategoryForm f;
            f.lambda2 = A * (A - al);
            f.lambda1 = 2.0 * B;
            f.lambda0 = B * B / (A * A) + al * A;
            f.alpha_eff = al;
            f.map_kind = VariableMapKind::CothLike;
            if (!(f.lambda2 > 0.0))
                fail_param("eckart canonical form needs A > alpha (lambda2 <= 0)");
            return f;
        }
        case PotentialId::PoschlTeller: {
            // y = tanh(alpha x / 2)
            SecondCategoryForm f;
            const double ae = 0.5 * al;
            const double a = 0.5 * (A + B), b = 0.5 * (B - A);
            f.alpha_eff = ae;
            f.lambda2 = a * (a + ae);
            f.mu2 = b * (b - ae);
            f.lambda0 = A * A - f.lambda2 - f.mu2;
            f.map_kind = VariableMapKind::TanhLike;
            if (!(f.mu2 > 0.0))
                fail_param("poschl-teller canonical form needs B > A + alpha (mu2 <= 0)");
            return f;
        }
        case PotentialId::PoschlTellerI: {
            SecondCategoryForm f;
            f.lambda2 = A * (A - al);
            f.mu2 = B * (B - al);
            f.lambda0 = -al * (A + B) - 2.0 * A * B;
            f.alpha_eff = al;
            f.map_kind = VariableMapKind::TanLike;
            return f;
        }
        case PotentialId::PoschlTellerII: {
            SecondCategoryForm f;
            f.lambda2 = A * (A + al);
            f.mu2 = B * (B - al);
            f.lambda0 = -al * (A - B) - 2.0 * A * B;
            f.alpha_eff = al;
            f.map_kind = VariableMapKind::TanhLike;
            if (!(f.mu2 > 0.0))
                fail_param("poschl-teller-2 canonical form needs B > alpha (mu2 <= 0)");
            return f;
        }
        case PotentialId::ScarfI: {
            // y = tan(alpha x / 2)
            SecondCategoryForm f;
            const double ae = 0.5 * al;
            const double a = 0.5 * (A + B), b = 0.5 * (A - B);
            f.alpha_eff = ae;
            f.lambda2 = a * (a - ae);
            f.mu2 = b * (b - ae);
            f.lambda0 = -ae * (a + b) - 2.0 * a * b;
            f.map_kind = VariableMapKind::TanLike;
            if (!(f.lambda2 > 0.0))
                fail_param("scarf-1 canonical form needs A + B > alpha (lambda2 <= 0)");
            if (!(f.mu2 > 0.0))
                fail_param("scarf-1 canonical form needs A - B > alpha (mu2 <= 0)");
            return f;
        }
        case PotentialId::Harmonic:
            return HarmonicForm{p.omega};
        case PotentialId::Morse:
            return MorseForm{A, B, al};
        case PotentialId::KeplerCoulomb: {
            CoulombForm f;
            f.g = p.g;
            f.l = p.l;
            f.a = p.l + 1.0;
            f.b = p.g / (2.0 * (p.l + 1.0));
            return f;
        }
        case PotentialId::Isotonic: {
            IsotonicForm f;
            f.omega = p.omega;
            f.l = p.l;
            f.a = 0.5 * p.omega;
            f.b = p.l + 1.0;
            return f;
        }
        case PotentialId::GenericFirst: {
            FirstCategoryForm f;
            f.lambda2 = p.lambda2;
            f.lambda1 = p.lambda1;
            f.lambda0 = p.lambda0;
            f.alpha_eff = al;
            f.map_kind = p.map_sign == MapSign::Plus ? VariableMapKind::TanLike
                                                     : VariableMapKind::TanhLike;
            return f;
        }
        case PotentialId::GenericSecond: {
            SecondCategoryForm f;
            f.lambda2 = p.lambda2;
            f.mu2 = p.mu2;
            f.lambda0 = p.lambda0;
            f.alpha_eff = al;
            f.map_kind = p.map_sign == MapSign::Plus ? VariableMapKind::TanLike
                                                     : VariableMapKind::TanhLike;
            return f;
        }
    }
    fail_param("unknown potential id");
}

SuperpotentialCoeffs superpotential_coeffs(const CanonicalForm& form) {
    if (const auto* f = std::get_if<FirstCategoryForm>(&form)) {
        if (!(f->lambda2 > 0.0)) fail_param("first category requires lambda2 > 0");
        const double ae = f->alpha_eff;
        const double s = std::sqrt(0.25 * ae * ae + f->lambda2);
        // a(a - ae) = lambda2 for tan- and coth-like maps, a(a + ae) otherwise
        const double a = (f->map_kind == VariableMapKind::TanhLike) ? (-0.5 * ae + s)
                                                                    : (0.5 * ae + s);
        if (!(a > 0.0)) fail_param("superpotential coefficient a must be positive");
        return {a, f->lambda1 / (2.0 * a)};
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&form)) {
        if (!(f->lambda2 > 0.0)) fail_param("second category requires lambda2 > 0");
        if (!(f->mu2 > 0.0)) fail_param("second category requires mu2 > 0");
        const double ae = f->alpha_eff;
        const double sa = std::sqrt(0.25 * ae * ae + f->lambda2);
        const double a = (f->map_kind == VariableMapKind::TanhLike) ? (-0.5 * ae + sa)
                                                                    : (0.5 * ae + sa);
        const double b = 0.5 * ae + std::sqrt(0.25 * ae * ae + f->mu2);
        if (!(a > 0.0)) fail_param("superpotential coefficient a must be positive");
        return {a, b};
    }
    if (const auto* f = std::get_if<HarmonicForm>(&form)) return {0.5 * f->omega, 0.0};
    if (const auto* f = std::get_if<MorseForm>(&form)) return {f->B, f->A};  // W = -B y + A
    if (const auto* f = std::get_if<CoulombForm>(&form)) return {f->a, f->b};
    const auto& f = std::get<IsotonicForm>(form);
    return {f.a, f.b};
}

double ground_state_energy(const CanonicalForm& form, const SuperpotentialCoeffs& c) {
    if (const auto* f = std::get_if<FirstCategoryForm>(&form)) {
        const double sgn = (f->map_kind == VariableMapKind::CothLike) ? -1.0 : 1.0;
        return f->lambda0 + sgn * f->alpha_eff * c.a - c.b * c.b;
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&form)) {
        const double sgn = (f->map_kind == VariableMapKind::TanLike) ? 1.0 : -1.0;
        return f->lambda0 + 2.0 * c.a * c.b + f->alpha_eff * (c.a + sgn * c.b);
    }
    return 0.0;  // exceptional potentials are normalized to E0 = 0
}

double ground_state_energy(const PotentialSpec& spec) {
    const CanonicalForm form = canonical_form(spec);
    return ground_state_energy(form, superpotential_coeffs(form));
}

// --- domains ----------------------------------------------------------------

Interval natural_domain(const PotentialSpec& spec) {
    const Params& p = spec.params();
    const double inf = std::numeric_limits<double>::infinity();
    switch (spec.id()) {
        case PotentialId::RosenMorseI: return {0.0, kPi / p.alpha};
        case PotentialId::RosenMorseII: return {-inf, inf};
        case PotentialId::Eckart: return {0.0, inf};
        case PotentialId::PoschlTeller: return {0.0, inf};
        case PotentialId::PoschlTellerI: return {0.0, 0.5 * kPi / p.alpha};
        case PotentialId::PoschlTellerII: return {0.0, inf};
        case PotentialId::ScarfI: return {0.0, kPi / p.alpha};
        case PotentialId::Harmonic: return {-inf, inf};
        case PotentialId::Morse: return {-inf, inf};
        case PotentialId::KeplerCoulomb: return {0.0, inf};
        case PotentialId::Isotonic: return {0.0, inf};
        case PotentialId::GenericFirst:
            if (p.map_sign == MapSign::Plus)
                return {-0.5 * kPi / p.alpha, 0.5 * kPi / p.alpha};
            return {-inf, inf};
        case PotentialId::GenericSecond:
            if (p.map_sign == MapSign::Plus) return {0.0, 0.5 * kPi / p.alpha};
            return {0.0, inf};
    }
    fail_param("unknown potential id");
}

namespace {

void check_domain(const PotentialSpec& spec, double x) {
    if (!std::isfinite(x)) throw DomainError("x is not finite");
    const Interval d = natural_domain(spec);
    if (!(x > d.lo && x < d.hi)) {
        throw DomainError("x=" + fmt(x) + " outside natural domain (" + fmt(d.lo) + ", " +
                          fmt(d.hi) + ") of " + potential_name(spec.id()));
    }
}

}  // namespace

Interval sample_window(const PotentialSpec& spec) {
    const Params& p = spec.params();
    const double al = p.alpha;
    switch (spec.id()) {
        case PotentialId::RosenMorseI: {
            const double w = kPi / al;
            return {0.025 * w, 0.975 * w};
        }
        case PotentialId::RosenMorseII: return {-6.0 / al, 6.0 / al};
        case PotentialId::Eckart: return {0.15 / al, 8.0 / al};
        case PotentialId::PoschlTeller: return {0.3 / al, 12.0 / al};
        case PotentialId::PoschlTellerI: {
            const double w = 0.5 * kPi / al;
            return {0.025 * w, 0.975 * w};
        }
        case PotentialId::PoschlTellerII: return {0.15 / al, 8.0 / al};
        case PotentialId::ScarfI: {
            const double w = kPi / al;
            return {0.025 * w, 0.975 * w};
        }
        case PotentialId::Harmonic: {
            const double L = 20.0 / std::sqrt(p.omega);
            return {-L, L};
        }
        case PotentialId::Morse: {
            const double lo = (std::log(p.B) - 3.5) / al;
            return {lo, lo + 12.0 / al};
        }
        case PotentialId::KeplerCoulomb: {
            const double s = 2.0 * (p.l + 1.0) * (p.l + 1.0) / p.g;
            return {0.05 * s, 20.0 * s};
        }
        case PotentialId::Isotonic: {
            const double s = std::sqrt(2.0 * (p.l + 1.0) / p.omega);
            return {0.1 * s, 4.5 * s};
        }
        case PotentialId::GenericFirst:
            if (p.map_sign == MapSign::Plus) {
                const double w = kPi / al;
                return {-0.475 * w, 0.475 * w};
            }
            return {-6.0 / al, 6.0 / al};
        case PotentialId::GenericSecond:
            if (p.map_sign == MapSign::Plus) {
                const double w = 0.5 * kPi / al;
                return {0.025 * w, 0.975 * w};
            }
            return {0.15 / al, 8.0 / al};
    }
    fail_param("unknown potential id");
}

// --- pointwise evaluation ---------------------------------------------------

double evaluate_potential(const PotentialSpec& spec, double x) {
    check_domain(spec, x);
    const Params& p = spec.params();
    const double A = p.A, B = p.B, al = p.alpha;
    switch (spec.id()) {
        case PotentialId::RosenMorseI: {
            const double s = std::sin(al * x);
            return A * (A - al) / (s * s) + 2.0 * B * std::cos(al * x) / s - A * A +
                   B * B / (A * A);
        }
        case PotentialId::RosenMorseII: {
            const double c = std::cosh(al * x);
            return -A * (A + al) / (c * c) + 2.0 * B * std::tanh(al * x) + A * A +
                   B * B / (A * A);
        }
        case PotentialId::Eckart: {
            const double s = std::sinh(al * x);
            return A * (A - al) / (s * s) - 2.0 * B * std::cosh(al * x) / s + A * A +
                   B * B / (A * A);
        }
        case PotentialId::PoschlTeller: {
            const double s = std::sinh(al * x);
            return A * A + (A * A + B * B + al * A) / (s * s) -
                   B * (2.0 * A + al) * std::cosh(al * x) / (s * s);
        }
        case PotentialId::PoschlTellerI: {
            const double c = std::cos(al * x), s = std::sin(al * x);
            return -(A + B) * (A + B) + A * (A - al) / (c * c) + B * (B - al) / (s * s);
        }
        case PotentialId::PoschlTellerII: {
            const double c = std::cosh(al * x), s = std::sinh(al * x);
            return (A - B) * (A - B) - A * (A + al) / (c * c) + B * (B - al) / (s * s);
        }
        case PotentialId::ScarfI: {
            const double s = std::sin(al * x);
            return -A * A + (A * A + B * B - al * A) / (s * s) -
                   B * (2.0 * A - al) * std::cos(al * x) / (s * s);
        }
        case PotentialId::Harmonic:
            return 0.25 * p.omega * p.omega * x * x - 0.5 * p.omega;
        case PotentialId::Morse: {
            const double y = std::exp(-al * x);
            return A * A + B * B * y * y - 2.0 * B * (A + 0.5 * al) * y;
        }
        case PotentialId::KeplerCoulomb: {
            const double lp1 = p.l + 1.0;
            return -p.g / x + p.l * lp1 / (x * x) + p.g * p.g / (4.0 * lp1 * lp1);
        }
        case PotentialId::Isotonic:
            return 0.25 * p.omega * p.omega * x * x + p.l * (p.l + 1.0) / (x * x) -
                   p.omega * (p.l + 1.5);
        case PotentialId::GenericFirst:
        case PotentialId::GenericSecond:
            return evaluate_potential_canonical(spec, x);
    }
    fail_param("unknown potential id");
}

VariableMapValue evaluate_variable_map(const PotentialSpec& spec, double x) {
    check_domain(spec, x);
    const Params& p = spec.params();
    const CanonicalForm form = canonical_form(spec);
    if (const auto* f = std::get_if<FirstCategoryForm>(&form)) {
        const double ae = f->alpha_eff;
        switch (f->map_kind) {
            case VariableMapKind::TanLike: {
                const double y = std::tan(ae * (x - f->x_offset));
                return {y, ae * (1.0 + y * y)};
            }
            case VariableMapKind::TanhLike: {
                const double y = std::tanh(ae * x);
                return {y, ae * (1.0 - y * y)};
            }
            case VariableMapKind::CothLike: {
                const double y = -1.0 / std::tanh(ae * x);
                return {y, ae * (y * y - 1.0)};
            }
        }
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&form)) {
        const double ae = f->alpha_eff;
        if (f->map_kind == VariableMapKind::TanLike) {
            const double y = std::tan(ae * x);
            return {y, ae * (1.0 + y * y)};
        }
        const double y = std::tanh(ae * x);
        return {y, ae * (1.0 - y * y)};
    }
    if (std::holds_alternative<HarmonicForm>(form)) return {x, 1.0};
    if (const auto* f = std::get_if<MorseForm>(&form)) {
        const double y = std::exp(-f->alpha * x);
        return {y, -f->alpha * y};
    }
    if (std::holds_alternative<CoulombForm>(form)) return {x, 1.0};
    return {x * x, 2.0 * x};  // isotonic: z = x^2
}

double evaluate_potential_canonical(const PotentialSpec& spec, double x) {
    const CanonicalForm form = canonical_form(spec);
    const double y = evaluate_variable_map(spec, x).y;
    if (const auto* f = std::get_if<FirstCategoryForm>(&form))
        return f->lambda2 * y * y + f->lambda1 * y + f->lambda0;
    if (const auto* f = std::get_if<SecondCategoryForm>(&form))
        return f->lambda2 * y * y + f->mu2 / (y * y) + f->lambda0;
    return evaluate_potential(spec, x);
}

double invert_variable_map(const PotentialSpec& spec, double u) {
    const CanonicalForm form = canonical_form(spec);
    if (const auto* f = std::get_if<FirstCategoryForm>(&form)) {
        switch (f->map_kind) {
            case VariableMapKind::TanLike: return f->x_offset + std::atan(u) / f->alpha_eff;
            case VariableMapKind::TanhLike: return std::atanh(u) / f->alpha_eff;
            case VariableMapKind::CothLike: return std::atanh(-1.0 / u) / f->alpha_eff;
        }
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&form)) {
        const double y = std::sqrt(u);
        if (f->map_kind == VariableMapKind::TanLike) return std::atan(y) / f->alpha_eff;
        return std::atanh(y) / f->alpha_eff;
    }
    if (const auto* f = std::get_if<MorseForm>(&form)) return -std::log(u) / f->alpha;
    if (std::holds_alternative<IsotonicForm>(form)) return std::sqrt(u);
    return u;  // harmonic, coulomb: canonical variable is x itself
}

double evaluate_superpotential(const PotentialSpec& spec, double x) {
    check_domain(spec, x);
    const CanonicalForm form = canonical_form(spec);
    const SuperpotentialCoeffs c = superpotential_coeffs(form);
    if (std::holds_alternative<FirstCategoryForm>(form)) {
        const double y = evaluate_variable_map(spec, x).y;
        return c.a * y + c.b;
    }
    if (std::holds_alternative<SecondCategoryForm>(form)) {
        const double y = evaluate_variable_map(spec, x).y;
        if (y == 0.0) throw SingularityError("superpotential singular at y = 0");
        return c.a * y - c.b / y;
    }
    if (const auto* f = std::get_if<HarmonicForm>(&form)) return 0.5 * f->omega * x;
    if (const auto* f = std::get_if<MorseForm>(&form))
        return f->A - f->B * std::exp(-f->alpha * x);
    if (const auto* f = std::get_if<CoulombForm>(&form)) return -f->a / x + f->b;
    const auto& f = std::get<IsotonicForm>(form);
    return f.a * x - f.b / x;
}

double superpotential_derivative(const PotentialSpec& spec, double x) {
    check_domain(spec, x);
    const CanonicalForm form = canonical_form(spec);
    const SuperpotentialCoeffs c = superpotential_coeffs(form);
    if (std::holds_alternative<FirstCategoryForm>(form)) {
        const VariableMapValue m = evaluate_variable_map(spec, x);
        return c.a * m.dy_dx;
    }
    if (std::holds_alternative<SecondCategoryForm>(form)) {
        const VariableMapValue m = evaluate_variable_map(spec, x);
        if (m.y == 0.0) throw SingularityError("superpotential singular at y = 0");
        return (c.a + c.b / (m.y * m.y)) * m.dy_dx;
    }
    if (const auto* f = std::get_if<HarmonicForm>(&form)) return 0.5 * f->omega;
    if (const auto* f = std::get_if<MorseForm>(&form))
        return f->alpha * f->B * std::exp(-f->alpha * x);
    if (const auto* f = std::get_if<CoulombForm>(&form)) return f->a / (x * x);
    const auto& f = std::get<IsotonicForm>(form);
    return f.a + f.b / (x * x);
}

double riccati_residual(const PotentialSpec& spec, double x) {
    const double W = evaluate_superpotential(spec, x);
    const double Wp = superpotential_derivative(spec, x);
    const double V = evaluate_potential(spec, x);
    const double E0 = ground_state_energy(spec);
    return W * W - Wp - (V - E0);
}

// --- spectra -----------------------------------------------------------------

double continuum_threshold(const PotentialSpec& spec) {
    const Params& p = spec.params();
    const double A = p.A, B = p.B;
    const double inf = std::numeric_limits<double>::infinity();
    switch (spec.id()) {
        case PotentialId::RosenMorseI: return inf;
        case PotentialId::RosenMorseII: return A * A + B * B / (A * A) - 2.0 * B;
        case PotentialId::Eckart: return A * A + B * B / (A * A) - 2.0 * B;
        case PotentialId::PoschlTeller: return A * A;
        case PotentialId::PoschlTellerI: return inf;
        case PotentialId::PoschlTellerII: return (A - B) * (A - B);
        case PotentialId::ScarfI: return inf;
        case PotentialId::Harmonic: return inf;
        case PotentialId::Morse: return A * A;
        case PotentialId::KeplerCoulomb: {
            const double lp1 = p.l + 1.0;
            return p.g * p.g / (4.0 * lp1 * lp1);
        }
        case PotentialId::Isotonic: return inf;
        case PotentialId::GenericFirst:
            if (p.map_sign == MapSign::Plus) return inf;
            return p.lambda2 - std::fabs(p.lambda1) + p.lambda0;
        case PotentialId::GenericSecond:
            if (p.map_sign == MapSign::Plus) return inf;
            return p.lambda2 + p.mu2 + p.lambda0;
    }
    fail_param("unknown potential id");
}

namespace {

double level_by_id(const PotentialSpec& spec, int n) {
    const Params& p = spec.params();
    const double A = p.A, B = p.B, al = p.alpha;
    const double k = static_cast<double>(n);
    switch (spec.id()) {
        case PotentialId::RosenMorseI: {
            const double s = A + al * k;
            return -A * A + B * B / (A * A) + s * s - B * B / (s * s);
        }
        case PotentialId::RosenMorseII: {
            const double s = A - al * k;
            return A * A + B * B / (A * A) - s * s - B * B / (s * s);
        }
        case PotentialId::Eckart: {
            const double s = A + al * k;
            return A * A + B * B / (A * A) - s * s - B * B / (s * s);
        }
        case PotentialId::PoschlTeller: {
            const double s = al * k - A;
            return A * A - s * s;
        }
        case PotentialId::PoschlTellerI: {
            const double s = 2.0 * al * k + A + B;
            return s * s - (A + B) * (A + B);
        }
        case PotentialId::PoschlTellerII: {
            const double s = 2.0 * al * k + B - A;
            return (B - A) * (B - A) - s * s;
        }
        case PotentialId::ScarfI: {
            const double s = A + al * k;
            return s * s - A * A;
        }
        case PotentialId::Harmonic: return k * p.omega;
        case PotentialId::Morse: {
            const double s = A - al * k;
            return A * A - s * s;
        }
        case PotentialId::KeplerCoulomb: {
            const double lp1 = p.l + 1.0;
            const double s = lp1 + k;
            return p.g * p.g / 4.0 * (1.0 / (lp1 * lp1) - 1.0 / (s * s));
        }
        case PotentialId::Isotonic: return 2.0 * k * p.omega;
        case PotentialId::GenericFirst:
        case PotentialId::GenericSecond:
            return master_form_level(spec, n);
    }
    fail_param("unknown potential id");
}

}  // namespace

double master_form_level(const PotentialSpec& spec, int n) {
    const CanonicalForm form = canonical_form(spec);
    const SuperpotentialCoeffs c = superpotential_coeffs(form);
    const double k = static_cast<double>(n);
    if (const auto* f = std::get_if<FirstCategoryForm>(&form)) {
        const double ae = f->alpha_eff, a = c.a, l1 = f->lambda1;
        switch (f->map_kind) {
            case VariableMapKind::TanLike: {
                const double s = a + ae * k;
                return -a * a + ae * a + f->lambda0 + s * s - l1 * l1 / (4.0 * s * s);
            }
            case VariableMapKind::TanhLike: {
                const double s = a - ae * k;
                return a * a + ae * a + f->lambda0 - s * s - l1 * l1 / (4.0 * s * s);
            }
            case VariableMapKind::CothLike: {
                const double s = a + ae * k;
                return a * a - ae * a + f->lambda0 - s * s - l1 * l1 / (4.0 * s * s);
            }
        }
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&form)) {
        const double ae = f->alpha_eff;
        if (f->map_kind == VariableMapKind::TanLike) {
            const double s = 2.0 * ae * k + c.a + c.b;
            return f->lambda0 - (f->mu2 + f->lambda2) + s * s;
        }
        const double s = 2.0 * ae * k - c.a + c.b;
        return f->lambda0 + (f->mu2 + f->lambda2) - s * s;
    }
    return level_by_id(spec, n);  // exceptional: the closed form is the master form
}

int level_count(const PotentialSpec& spec) {
    if (std::isinf(continuum_threshold(spec))) return unbounded_levels;
    if (spec.id() == PotentialId::KeplerCoulomb) return unbounded_levels;  // accumulation point
    const double thr = continuum_threshold(spec);
    double prev = -std::numeric_limits<double>::infinity();
    int n = 0;
    while (n < 1000000) {
        const double e = level_by_id(spec, n);
        if (!(e < thr) || !(e > prev)) break;
        prev = e;
        ++n;
    }
    return n;
}

double closed_form_level(const PotentialSpec& spec, int n) {
    if (n < 0) throw IndexError("level index must be non-negative");
    const int count = level_count(spec);
    if (count != unbounded_levels && n >= count) {
        throw IndexError("level n=" + std::to_string(n) + " exceeds bound-state count " +
                         std::to_string(count));
    }
    return level_by_id(spec, n);
}

// --- metadata ----------------------------------------------------------------

const std::vector<PotentialInfo>& catalog_info() {
    static const std::vector<PotentialInfo> info = {
        {PotentialId::RosenMorseI, "rosen-morse-1", "Rosen-Morse I", "first", "A, B, alpha",
         "A > alpha/2 (A > alpha for canonical form)",
         "E_n = -A^2 + B^2/A^2 + (A+alpha*n)^2 - B^2/(A+alpha*n)^2"},
        {PotentialId::RosenMorseII, "rosen-morse-2", "Rosen-Morse II", "first", "A, B, alpha",
         "A > 0, 0 < B < A^2",
         "E_n = A^2 + B^2/A^2 - (A-alpha*n)^2 - B^2/(A-alpha*n)^2"},
        {PotentialId::Eckart, "eckart", "Eckart", "first", "A, B, alpha",
         "A > 0, B > A^2 (A > alpha for canonical form)",
         "E_n = A^2 + B^2/A^2 - (A+alpha*n)^2 - B^2/(A+alpha*n)^2"},
        {PotentialId::PoschlTeller, "poschl-teller", "Poschl-Teller", "second", "A, B, alpha",
         "B > A > 0 (B > A + alpha for canonical form)", "E_n = A^2 - (alpha*n - A)^2"},
        {PotentialId::PoschlTellerI, "poschl-teller-1", "Poschl-Teller I", "second",
         "A, B, alpha", "A > alpha, B > alpha",
         "E_n = (2*alpha*n + A + B)^2 - (A+B)^2"},
        {PotentialId::PoschlTellerII, "poschl-teller-2", "Poschl-Teller II", "second",
         "A, B, alpha", "0 < B < A (B > alpha for canonical form)",
         "E_n = (B-A)^2 - (2*alpha*n + B - A)^2"},
        {PotentialId::ScarfI, "scarf-1", "Scarf I", "second", "A, B, alpha",
         "0 < B < A (A-B > alpha for canonical form)", "E_n = (A + alpha*n)^2 - A^2"},
        {PotentialId::Harmonic, "harmonic", "Harmonic", "first/exceptional", "omega",
         "omega > 0", "E_n = n*omega"},
        {PotentialId::Morse, "morse", "Morse", "first/exceptional", "A, B, alpha",
         "A, B, alpha > 0", "E_n = A^2 - (A - alpha*n)^2"},
        {PotentialId::KeplerCoulomb, "kepler-coulomb", "Kepler-Coulomb", "first/exceptional",
         "g, l", "g > 0, l >= 0", "E_n = g^2/(4(l+1)^2) - g^2/(4(l+1+n)^2)"},
        {PotentialId::Isotonic, "isotonic", "Isotonic", "second/exceptional", "omega, l",
         "omega > 0, l >= 0", "E_n = 2*n*omega"},
    };
    return info;
}

std::string potential_name(PotentialId id) {
    for (const auto& e : catalog_info())
        if (e.id == id) return e.cli_name;
    if (id == PotentialId::GenericFirst) return "generic-first";
    if (id == PotentialId::GenericSecond) return "generic-second";
    return "unknown";
}

PotentialSpec reference_spec(PotentialId id) {
    switch (id) {
        case PotentialId::RosenMorseI: return PotentialSpec::rosen_morse_1(2.0, 1.0, 1.0);
        case PotentialId::RosenMorseII: return PotentialSpec::rosen_morse_2(2.0, 0.5, 1.0);
        case PotentialId::Eckart: return PotentialSpec::eckart(1.5, 16.0, 1.0);
        case PotentialId::PoschlTeller: return PotentialSpec::poschl_teller(3.0, 4.5, 1.0);
        case PotentialId::PoschlTellerI: return PotentialSpec::poschl_teller_1(3.0, 2.0, 1.0);
        case PotentialId::PoschlTellerII: return PotentialSpec::poschl_teller_2(7.0, 2.0, 1.0);
        case PotentialId::ScarfI: return PotentialSpec::scarf_1(3.0, 1.0, 1.0);
        case PotentialId::Harmonic: return PotentialSpec::harmonic(2.0);
        case PotentialId::Morse: return PotentialSpec::morse(2.0, 1.0, 1.0);
        case PotentialId::KeplerCoulomb: return PotentialSpec::kepler_coulomb(2.0, 1.0);
        case PotentialId::Isotonic: return PotentialSpec::isotonic(2.0, 1.0);
        default: fail_param("no reference parameters for generic potentials");
    }
}

std::vector<PotentialSpec> reference_specs() {
    std::vector<PotentialSpec> out;
    for (const auto& e : catalog_info()) out.push_back(reference_spec(e.id));
    return out;
}

}  // namespace swkb
