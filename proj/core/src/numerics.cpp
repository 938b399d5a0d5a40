#include "swkb/numerics.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace swkb {

namespace {

double midpoint_theta_rule(const std::function<double(double)>& f,
                           double m, double h, int n) {
    const double pi = 3.14159265358979323846;
    const double dtheta = pi / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double theta = (j + 0.5) * dtheta;
        const double t = m + h * std::cos(theta);
        const double v = f(t);
        if (!std::isfinite(v)) {
            throw NonFiniteSample("integrand returned non-finite value at t = " +
                                  std::to_string(t));
        }
        sum += v * std::sin(theta);
    }
    return sum * h * dtheta;
}

}  // namespace

QuadratureResult integrate_sqrt_endpoints(const std::function<double(double)>& f,
                                          const QuadratureSpec& q) {
    if (!(q.lo < q.hi)) throw RangeError("quadrature requires lo < hi");
    if (!(q.target_abs_tol > 0.0)) throw RangeError("quadrature tolerance must be positive");

    const double m = 0.5 * (q.lo + q.hi);
    const double h = 0.5 * (q.hi - q.lo);

    int n = 16;
    double prev = midpoint_theta_rule(f, m, h, n);
    while (n <= q.max_order) {
        n *= 2;
        const double cur = midpoint_theta_rule(f, m, h, n);
        const double delta = std::fabs(cur - prev);
        if (delta < q.target_abs_tol) return {cur, delta};
        prev = cur;
    }
    throw QuadratureFailure("quadrature did not converge to " +
                            std::to_string(q.target_abs_tol) + " at order " +
                            std::to_string(q.max_order));
}

double find_root(const std::function<double(double)>& g, const RootSpec& r) {
    double a = r.lo, b = r.hi;
    double fa = g(a), fb = g(b);

    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        throw NoSignChange("no sign change over [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    }

    double c = a, fc = fa;
    double d = b - a, e = d;

    for (int iter = 0; iter < r.max_iter; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.220446049250313e-16 * std::fabs(b) + 0.5 * r.tol_x;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || std::fabs(fb) < r.tol_f) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic interpolation / secant
            const double s = fb / fa;
            double p, qq;
            if (a == c) {
                p = 2.0 * xm * s;
                qq = 1.0 - s;
            } else {
                const double q1 = fa / fc;
                const double r1 = fb / fc;
                p = s * (2.0 * xm * q1 * (q1 - r1) - (b - a) * (r1 - 1.0));
                qq = (q1 - 1.0) * (r1 - 1.0) * (s - 1.0);
            }
            if (p > 0.0) qq = -qq;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * qq - std::fabs(tol1 * qq), std::fabs(e * qq))) {
                e = d;
                d = p / qq;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = g(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw MaxIterations("root finder exceeded " + std::to_string(r.max_iter) + " iterations");
}

}  // namespace swkb
