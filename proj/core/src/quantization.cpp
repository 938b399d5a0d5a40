#include "swkb/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swkb {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;

struct Roots {
    double lo = 0.0, hi = 0.0;
};

// Roots of u^2 - S u + P = 0, stable against cancellation.
Roots quadratic_roots(double S, double P) {
    const double disc = S * S - 4.0 * P;
    if (!(disc > 0.0)) throw NoBoundRegion("turning-point discriminant is not positive");
    const double sq = std::sqrt(disc);
    double big, small;
    if (S >= 0.0) {
        big = 0.5 * (S + sq);
        small = (big != 0.0) ? P / big : 0.5 * (S - sq);
    } else {
        small = 0.5 * (S - sq);
        big = P / small;
    }
    return {std::min(small, big), std::max(small, big)};
}

struct ActionContext {
    CanonicalForm form;
    SuperpotentialCoeffs c;
    double e0;
};

ActionContext make_context(const PotentialSpec& spec) {
    ActionContext ctx{canonical_form(spec), {}, 0.0};
    ctx.c = superpotential_coeffs(ctx.form);
    ctx.e0 = ground_state_energy(ctx.form, ctx.c);
    return ctx;
}

TurningPoints finish_points(const PotentialSpec& spec, double u_lo, double u_hi,
                            ActionKind kind) {
    TurningPoints tp;
    tp.kind = kind;
    tp.u_left = u_lo;
    tp.u_right = u_hi;
    const double xa = invert_variable_map(spec, u_lo);
    const double xb = invert_variable_map(spec, u_hi);
    tp.x_left = std::min(xa, xb);
    tp.x_right = std::max(xa, xb);
    return tp;
}

[[noreturn]] void no_region(const char* what) { throw NoBoundRegion(what); }

}  // namespace

TurningPoints turning_points(const PotentialSpec& spec, double E, ActionKind kind) {
    const ActionContext ctx = make_context(spec);
    const double a = ctx.c.a, b = ctx.c.b;

    if (const auto* f = std::get_if<FirstCategoryForm>(&ctx.form)) {
        Roots r;
        if (kind == ActionKind::Swkb) {
            const double sh = E - ctx.e0;
            if (!(sh > 0.0)) no_region("SWKB requires E > E0");
            const double s = std::sqrt(sh);
            r = {(-b - s) / a, (-b + s) / a};
        } else {
            r = quadratic_roots(-f->lambda1 / f->lambda2, (f->lambda0 - E) / f->lambda2);
        }
        switch (f->map_kind) {
            case VariableMapKind::TanLike:
                break;
            case VariableMapKind::TanhLike:
                if (!(r.lo > -1.0 && r.hi < 1.0))
                    no_region("turning points outside the tanh map range (-1, 1)");
                break;
            case VariableMapKind::CothLike:
                if (!(r.hi < -1.0)) no_region("turning points outside the coth map range");
                break;
        }
        return finish_points(spec, r.lo, r.hi, kind);
    }

    if (const auto* f = std::get_if<SecondCategoryForm>(&ctx.form)) {
        Roots r;
        if (kind == ActionKind::Swkb) {
            const double sh = E - ctx.e0;
            if (!(sh > 0.0)) no_region("SWKB requires E > E0");
            r = quadratic_roots((sh + 2.0 * a * b) / (a * a), (b * b) / (a * a));
        } else {
            r = quadratic_roots((E - f->lambda0) / f->lambda2, f->mu2 / f->lambda2);
        }
        if (!(r.lo > 0.0)) no_region("turning points outside z > 0");
        if (f->map_kind == VariableMapKind::TanhLike && !(r.hi < 1.0))
            no_region("turning points outside the tanh map range z < 1");
        return finish_points(spec, r.lo, r.hi, kind);
    }

    if (const auto* f = std::get_if<HarmonicForm>(&ctx.form)) {
        const double shifted = (kind == ActionKind::Swkb) ? E - ctx.e0 : E + 0.5 * f->omega;
        if (!(shifted > 0.0)) no_region("energy below the classical region");
        const double xr = 2.0 * std::sqrt(shifted) / f->omega;
        return finish_points(spec, -xr, xr, kind);
    }

    if (const auto* f = std::get_if<MorseForm>(&ctx.form)) {
        Roots r;
        if (kind == ActionKind::Swkb) {
            const double sh = E - ctx.e0;
            if (!(sh > 0.0)) no_region("SWKB requires E > E0");
            if (!(sh < f->A * f->A)) no_region("energy at or above the continuum threshold");
            const double s = std::sqrt(sh);
            r = {(f->A - s) / f->B, (f->A + s) / f->B};
        } else {
            if (!(E < f->A * f->A)) no_region("energy at or above the continuum threshold");
            r = quadratic_roots((2.0 * f->A + f->alpha) / f->B,
                                (f->A * f->A - E) / (f->B * f->B));
        }
        if (!(r.lo > 0.0)) no_region("turning points outside y > 0");
        return finish_points(spec, r.lo, r.hi, kind);
    }

    if (const auto* f = std::get_if<CoulombForm>(&ctx.form)) {
        const double bb = f->b * f->b;
        Roots r;
        if (kind == ActionKind::Swkb) {
            const double sh = E - ctx.e0;
            if (!(sh > 0.0)) no_region("SWKB requires E > E0");
            if (!(sh < bb)) no_region("energy at or above the continuum threshold");
            r = quadratic_roots(2.0 * f->a * f->b / (bb - sh), f->a * f->a / (bb - sh));
        } else {
            if (!(E < bb)) no_region("energy at or above the continuum threshold");
            r = quadratic_roots(2.0 * f->a * f->b / (bb - E),
                                f->a * (f->a - 1.0) / (bb - E));
        }
        if (r.lo < 0.0) no_region("turning points outside x >= 0");
        return finish_points(spec, r.lo, r.hi, kind);
    }

    const auto& f = std::get<IsotonicForm>(ctx.form);
    Roots r;
    if (kind == ActionKind::Swkb) {
        const double sh = E - ctx.e0;
        if (!(sh > 0.0)) no_region("SWKB requires E > E0");
        r = quadratic_roots((sh + 2.0 * f.a * f.b) / (f.a * f.a),
                            (f.b * f.b) / (f.a * f.a));
    } else {
        r = quadratic_roots((E + 2.0 * f.a * f.b + f.a) / (f.a * f.a),
                            f.b * (f.b - 1.0) / (f.a * f.a));
    }
    if (r.lo < 0.0) no_region("turning points outside z >= 0");
    return finish_points(spec, r.lo, r.hi, ActionKind(kind));
}

// --- moment integrals --------------------------------------------------------

double moment_integral_first(double lo, double hi, MapSign sign) {
    if (!(lo <= hi)) throw RangeError("moment integral requires lo <= hi");
    if (lo == hi) return 0.0;
    if (sign == MapSign::Plus) {
        const double p = lo * hi;
        const double X = (1.0 + lo * lo) * (1.0 + hi * hi);
        // sqrt(X) - p, rewritten to avoid cancellation for large same-sign lo, hi
        const double diff = (p > 0.0) ? (1.0 + lo * lo + hi * hi) / (std::sqrt(X) + p)
                                      : std::sqrt(X) - p;
        return (kPi / kSqrt2) * std::sqrt(diff + 1.0) - kPi;
    }
    if (!(lo > -1.0 && hi < 1.0))
        throw RangeError("minus-branch moment integral requires -1 < lo <= hi < 1");
    return 0.5 * kPi *
           (2.0 - std::sqrt((1.0 - lo) * (1.0 - hi)) - std::sqrt((1.0 + lo) * (1.0 + hi)));
}

double moment_integral_first_outer(double lo, double hi) {
    if (!(lo <= hi)) throw RangeError("moment integral requires lo <= hi");
    if (!(hi < -1.0)) throw RangeError("outer moment integral requires lo <= hi < -1");
    return 0.5 * kPi *
           (std::sqrt((1.0 - lo) * (1.0 - hi)) - std::sqrt((1.0 + lo) * (1.0 + hi)) - 2.0);
}

double moment_integral_second(double lo, double hi, MapSign sign) {
    if (!(lo > 0.0)) throw RangeError("second-category moment integral requires lo > 0");
    if (!(lo <= hi)) throw RangeError("moment integral requires lo <= hi");
    if (lo == hi) return 0.0;
    if (sign == MapSign::Plus) {
        // pi (sqrt((1+lo)(1+hi)) - sqrt(lo hi) - 1), stabilized
        const double num = 1.0 + lo + hi;
        const double den = std::sqrt((1.0 + lo) * (1.0 + hi)) + std::sqrt(lo * hi);
        return kPi * (num / den - 1.0);
    }
    if (!(hi < 1.0)) throw RangeError("minus-branch moment integral requires hi < 1");
    return kPi * (1.0 - std::sqrt(lo * hi) - std::sqrt((1.0 - lo) * (1.0 - hi)));
}

double moment_integral_inverse(double lo, double hi) {
    if (!(lo >= 0.0 && lo <= hi)) throw RangeError("inverse moment requires 0 <= lo <= hi");
    return kPi * (0.5 * (lo + hi) - std::sqrt(lo * hi));
}

// --- actions -----------------------------------------------------------------

namespace {

QuadratureResult quad(const std::function<double(double)>& f, double lo, double hi) {
    QuadratureSpec q;
    q.lo = lo;
    q.hi = hi;
    return integrate_sqrt_endpoints(f, q);
}

double sqrt_clamped(double v) { return std::sqrt(std::max(v, 0.0)); }

// Closed-form action assembled from the moment integrals:
// prefactor * moment(u_left, u_right) per category and map kind.
double closed_action(const PotentialSpec& spec, const ActionContext& ctx,
                     const TurningPoints& tp, double strength) {
    if (const auto* f = std::get_if<FirstCategoryForm>(&ctx.form)) {
        const double pref = strength / f->alpha_eff;
        switch (f->map_kind) {
            case VariableMapKind::TanLike:
                return pref * moment_integral_first(tp.u_left, tp.u_right, MapSign::Plus);
            case VariableMapKind::TanhLike:
                return pref * moment_integral_first(tp.u_left, tp.u_right, MapSign::Minus);
            case VariableMapKind::CothLike:
                return pref * moment_integral_first_outer(tp.u_left, tp.u_right);
        }
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&ctx.form)) {
        const double pref = strength / (2.0 * f->alpha_eff);
        const MapSign s = map_sign_of(f->map_kind);
        return pref * moment_integral_second(tp.u_left, tp.u_right, s);
    }
    if (const auto* f = std::get_if<HarmonicForm>(&ctx.form)) {
        const double w = tp.x_right - tp.x_left;
        return 0.5 * f->omega * kPi * w * w / 8.0;
    }
    if (const auto* f = std::get_if<MorseForm>(&ctx.form))
        return (f->B / f->alpha) * moment_integral_inverse(tp.u_left, tp.u_right);
    if (std::holds_alternative<CoulombForm>(ctx.form))
        return strength * moment_integral_inverse(tp.u_left, tp.u_right);
    const auto& f = std::get<IsotonicForm>(ctx.form);
    return 0.5 * f.a * moment_integral_inverse(tp.u_left, tp.u_right);
}

// Quadrature of the reduced canonical-variable integral.
ActionValue canonical_quadrature(const PotentialSpec& spec, const ActionContext& ctx,
                                 const TurningPoints& tp, double strength) {
    const double ul = tp.u_left, ur = tp.u_right;
    auto weighted = [&](const std::function<double(double)>& w, double pref) {
        auto f = [&, w](double u) {
            return sqrt_clamped((ur - u) * (u - ul)) * w(u);
        };
        const QuadratureResult r = quad(f, ul, ur);
        return ActionValue{pref * r.value, ActionMethod::CanonicalQuadrature,
                           std::fabs(pref) * r.error_estimate};
    };
    if (const auto* f = std::get_if<FirstCategoryForm>(&ctx.form)) {
        const double pref = strength / f->alpha_eff;
        switch (f->map_kind) {
            case VariableMapKind::TanLike:
                return weighted([](double y) { return 1.0 / (1.0 + y * y); }, pref);
            case VariableMapKind::TanhLike:
                return weighted([](double y) { return 1.0 / (1.0 - y * y); }, pref);
            case VariableMapKind::CothLike:
                return weighted([](double y) { return 1.0 / (y * y - 1.0); }, pref);
        }
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&ctx.form)) {
        const double pref = strength / (2.0 * f->alpha_eff);
        if (f->map_kind == VariableMapKind::TanLike)
            return weighted([](double z) { return 1.0 / (z * (1.0 + z)); }, pref);
        return weighted([](double z) { return 1.0 / (z * (1.0 - z)); }, pref);
    }
    if (const auto* f = std::get_if<HarmonicForm>(&ctx.form))
        return weighted([](double) { return 1.0; }, 0.5 * f->omega);
    if (const auto* f = std::get_if<MorseForm>(&ctx.form))
        return weighted([](double y) { return 1.0 / y; }, f->B / f->alpha);
    if (std::holds_alternative<CoulombForm>(ctx.form))
        return weighted([](double x) { return 1.0 / x; }, strength);
    const auto& f = std::get<IsotonicForm>(ctx.form);
    return weighted([](double z) { return 1.0 / z; }, 0.5 * f.a);
}

ActionValue raw_quadrature(const PotentialSpec& spec, const TurningPoints& tp,
                           const std::function<double(double)>& integrand) {
    const QuadratureResult r = quad(integrand, tp.x_left, tp.x_right);
    return {r.value, ActionMethod::RawQuadrature, r.error_estimate};
}

}  // namespace

ActionValue swkb_action(const PotentialSpec& spec, double E, ActionMethod method) {
    const ActionContext ctx = make_context(spec);
    if (std::fabs(E - ctx.e0) <= degenerate_energy_window)
        return {0.0, method, 0.0};  // turning points coalesce at E0
    const double sh = E - ctx.e0;
    if (!(sh > 0.0)) throw NoBoundRegion("SWKB action requires E > E0");

    const TurningPoints tp = turning_points(spec, E, ActionKind::Swkb);
    switch (method) {
        case ActionMethod::ClosedForm:
            return {closed_action(spec, ctx, tp, ctx.c.a), ActionMethod::ClosedForm, 0.0};
        case ActionMethod::CanonicalQuadrature: {
            double strength = ctx.c.a;
            if (const auto* f = std::get_if<CoulombForm>(&ctx.form))
                strength = std::sqrt(f->b * f->b - sh);
            return canonical_quadrature(spec, ctx, tp, strength);
        }
        case ActionMethod::RawQuadrature:
            return raw_quadrature(spec, tp, [&spec, sh](double x) {
                const double W = evaluate_superpotential(spec, x);
                return sqrt_clamped(sh - W * W);
            });
    }
    throw Error("unknown action method");
}

ActionValue pq_action(const PotentialSpec& spec, double E, ActionMethod method) {
    const ActionContext ctx = make_context(spec);
    const TurningPoints tp = turning_points(spec, E, ActionKind::Proper);

    double strength = 0.0;  // sqrt(lambda2)-type prefactor
    if (const auto* f = std::get_if<FirstCategoryForm>(&ctx.form))
        strength = std::sqrt(f->lambda2);
    else if (const auto* f = std::get_if<SecondCategoryForm>(&ctx.form))
        strength = std::sqrt(f->lambda2);
    else if (const auto* f = std::get_if<CoulombForm>(&ctx.form))
        strength = std::sqrt(f->b * f->b - E);

    switch (method) {
        case ActionMethod::ClosedForm:
            return {closed_action(spec, ctx, tp, strength), ActionMethod::ClosedForm, 0.0};
        case ActionMethod::CanonicalQuadrature:
            return canonical_quadrature(spec, ctx, tp, strength);
        case ActionMethod::RawQuadrature: {
            if (const auto* f = std::get_if<IsotonicForm>(&ctx.form); f && tp.u_left == 0.0) {
                // l = 0: the allowed region touches the x = 0 wall with a
                // non-vanishing integrand; V is even in x, so integrate the
                // reflected integrand over (-x_r, x_r) to keep both endpoints
                // square-root-like.
                auto g = [&spec, E](double x) {
                    return sqrt_clamped(E - evaluate_potential(spec, std::fabs(x)));
                };
                const QuadratureResult r = quad(g, -tp.x_right, tp.x_right);
                return {0.5 * r.value, ActionMethod::RawQuadrature, 0.5 * r.error_estimate};
            }
            return raw_quadrature(spec, tp, [&spec, E](double x) {
                return sqrt_clamped(E - evaluate_potential(spec, x));
            });
        }
    }
    throw Error("unknown action method");
}

double pq_ground_closed(const PotentialSpec& spec) {
    const ActionContext ctx = make_context(spec);
    const double a = ctx.c.a, b = ctx.c.b;
    if (const auto* f = std::get_if<FirstCategoryForm>(&ctx.form)) {
        const double root = std::sqrt(f->lambda2);
        const double v = (f->map_kind == VariableMapKind::TanhLike) ? (root - a) : (a - root);
        return kPi * v / f->alpha_eff;
    }
    if (const auto* f = std::get_if<SecondCategoryForm>(&ctx.form)) {
        const double rl = std::sqrt(f->lambda2), rm = std::sqrt(f->mu2);
        if (f->map_kind == VariableMapKind::TanLike)
            return 0.5 * kPi * (a + b - rl - rm) / f->alpha_eff;
        if (!(b < a))
            throw ParamError("second-category tanh-like branch requires b < a (a=" +
                             std::to_string(a) + ", b=" + std::to_string(b) + ")");
        return 0.5 * kPi * (b - a + rl - rm) / f->alpha_eff;
    }
    if (std::holds_alternative<HarmonicForm>(ctx.form)) return 0.5 * kPi;
    if (std::holds_alternative<MorseForm>(ctx.form)) return 0.5 * kPi;
    if (const auto* f = std::get_if<CoulombForm>(&ctx.form))
        return kPi * (f->a - std::sqrt(f->a * (f->a - 1.0)));
    const auto& f = std::get<IsotonicForm>(ctx.form);
    return 0.5 * kPi * (f.b + 0.5 - std::sqrt(f.b * (f.b - 1.0)));
}

double equivalence_residual(const PotentialSpec& spec, double E) {
    const double e0 = ground_state_energy(spec);
    const double swkb = swkb_action(spec, E, ActionMethod::RawQuadrature).value;
    const double pq = pq_action(spec, E, ActionMethod::RawQuadrature).value;
    const double gamma = pq_action(spec, e0, ActionMethod::RawQuadrature).value;
    return swkb - pq + gamma;
}

}  // namespace swkb
