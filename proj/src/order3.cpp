#include "nrc/order3.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nrc/dd.hpp"

namespace nrc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;

double sqrt_of(double x) { return std::sqrt(x); }
DD sqrt_of(DD x) { return dd_sqrt(x); }
double value_of(double x) { return x; }
double value_of(DD x) { return x.value(); }

// L as a function of |a|.  1 - 4 Delta^2 is evaluated through the
// cancellation-free identity 1 - 4 Delta^2 = ((1 - r^2)/(1 + r^2))^2 with
// r = |a|, which stays accurate as r -> 1.
template <typename Real>
Real big_l_formula(Real r) {
    Real one(1.0);
    Real r2 = r * r;
    Real denom_r = one + r2;
    Real delta = r / denom_r;
    Real d2 = delta * delta;
    Real d3 = d2 * delta;
    Real d4 = d2 * d2;
    Real one_minus_4d2 = ((one - r2) / denom_r) * ((one - r2) / denom_r);
    Real numer = Real(3.0) + Real(6.0) * d3 * sqrt_of(Real(3.0) - Real(3.0) * d2) -
                 Real(6.0) * d4 - Real(6.0) * d2;
    Real denom = Real(4.0) * (one - d2) * one_minus_4d2;
    return numer / denom;
}

// Largest real root of x^3 - L x - c with 4 L^3 > 27 c^2 (always true here:
// L > 3/4 and |c| <= 1/4), via the trigonometric method plus Newton polish.
template <typename Real>
Real largest_cubic_root(Real big_l, Real c) {
    double l = value_of(big_l);
    double cd = value_of(c);
    double s = 2.0 * std::sqrt(l / 3.0);
    double arg = std::clamp(3.0 * cd / (l * s), -1.0, 1.0);
    Real root(s * std::cos(std::acos(arg) / 3.0));
    for (int it = 0; it < 3; ++it) {
        Real f = root * root * root - big_l * root - c;
        Real fp = Real(3.0) * root * root - big_l;
        root = root - f / fp;
    }
    return root;
}

double radical_equation_residual(double lambda, const std::array<double, 3>& zeta, double delta) {
    double d2 = delta * delta;
    double d3 = d2 * delta;
    double prod = 1.0, sum = 0.0, rad = 1.0;
    for (double z : zeta) {
        prod *= lambda - z;
        sum += lambda * lambda * lambda - z * z * z;
        rad *= std::sqrt(lambda * lambda + lambda * z + z * z);
    }
    return prod - d2 * sum - 2.0 * d3 * rad;
}

}  // namespace

Order3Geometry geometry_of(cplx a) {
    double r = std::abs(a);
    if (r == 0.0) throw std::invalid_argument("geometry_of: fixed point must be nonzero");
    if (r >= 1.0) throw std::invalid_argument("geometry_of: |a| must be < 1");
    Order3Geometry geo;
    geo.a = a;
    geo.delta = r / (1.0 + r * r);
    geo.near_unit_warning = r > 0.95;
    geo.big_l = geo.near_unit_warning ? big_l_formula(DD(r)).value() : big_l_formula(r);
    return geo;
}

std::array<double, 3> chebyshev_zeta(double alpha) {
    return {std::cos(alpha), std::cos(alpha - kTwoThirdsPi), std::cos(alpha + kTwoThirdsPi)};
}

double lambda0(double alpha, const Order3Geometry& geo) {
    if (!(geo.big_l > 0.75)) throw std::invalid_argument("lambda0: requires L > 3/4");
    double c = 0.25 * std::cos(3.0 * alpha);
    double root = geo.near_unit_warning
                      ? largest_cubic_root(DD(geo.big_l), DD(c)).value()
                      : largest_cubic_root(geo.big_l, c);

    // Reject roots that satisfy only the squared form of the support
    // equation: substitute back into the radical form with delta = Delta.
    double res = radical_equation_residual(root, chebyshev_zeta(alpha), geo.delta);
    double s = std::abs(root) + 1.0;
    if (std::abs(res) / (s * s * s) > 1e-9) {
        std::ostringstream msg;
        msg << "lambda0: radical-form residual " << res << " at alpha=" << alpha
            << " exceeds tolerance (wrong root branch)";
        throw std::runtime_error(msg.str());
    }
    return root;
}

double lambda0_derivative(double alpha, const Order3Geometry& geo) {
    double lam = lambda0(alpha, geo);
    double c = std::cos(alpha);
    double denom = 3.0 * lam * lam - geo.big_l;
    if (std::abs(denom) < 1e-12)
        throw std::runtime_error("lambda0_derivative: vanishing derivative denominator");
    return std::sin(alpha) * (0.75 - 3.0 * c * c) / denom;
}

double lambda_prime_zeta(const std::array<double, 3>& zeta, const std::array<double, 3>& delta,
                         const Order3Geometry& geo) {
    for (double d : delta)
        if (!(d >= 0.0)) throw std::invalid_argument("lambda_prime: correlations must be nonnegative");

    auto f = [&](double lam) {
        double prod = 1.0, sum = 0.0, rad = 1.0;
        for (int j = 0; j < 3; ++j) {
            double z = zeta[static_cast<std::size_t>(j)];
            double d = delta[static_cast<std::size_t>(j)];
            prod *= lam - z;
            sum += (lam * lam * lam - z * z * z) * d * d;
            rad *= std::sqrt(lam * lam + lam * z + z * z) * d;
        }
        return prod - sum - 2.0 * rad;
    };

    double lo = std::max({zeta[0], zeta[1], zeta[2]});
    double hi = 1.0 + delta[0] + delta[1] + delta[2] + geo.big_l;
    if (f(hi) <= 0.0)
        throw std::runtime_error("lambda_prime: no sign change in bracket");

    // The determinant is positive for all lambda beyond the largest root, so
    // the first sign change scanning down from hi brackets that root.
    const int grid = 256;
    double right = hi, f_right = f(hi);
    double left = lo, f_left = f(lo);
    for (int i = 1; i <= grid; ++i) {
        double x = hi - (hi - lo) * static_cast<double>(i) / grid;
        double fx = f(x);
        if (fx <= 0.0) {
            left = x;
            f_left = fx;
            break;
        }
        right = x;
        f_right = fx;
    }
    if (f_left > 0.0) throw std::runtime_error("lambda_prime: no sign change in bracket");

    // Bisection with a secant accelerant; plain bisection every other step
    // keeps the bracket shrinking when the secant stagnates on one side.
    for (int it = 0; it < 200 && right - left > 1e-14 * std::max(1.0, std::abs(right)); ++it) {
        double mid;
        if (it % 2 == 0 && f_right != f_left) {
            mid = right - f_right * (right - left) / (f_right - f_left);
            if (!(mid > left && mid < right)) mid = 0.5 * (left + right);
        } else {
            mid = 0.5 * (left + right);
        }
        double fm = f(mid);
        if (fm <= 0.0) {
            left = mid;
            f_left = fm;
        } else {
            right = mid;
            f_right = fm;
        }
    }
    return 0.5 * (left + right);
}

double lambda_prime(double alpha, const std::array<double, 3>& delta, const Order3Geometry& geo) {
    return lambda_prime_zeta(chebyshev_zeta(alpha), delta, geo);
}

Eigen::Matrix3d coupling_matrix(double lambda, const std::array<double, 3>& zeta,
                                const std::array<double, 3>& delta,
                                const std::array<double, 3>& phi) {
    auto entry = [&](int k) {
        double z = zeta[static_cast<std::size_t>(k)];
        double ph = phi[static_cast<std::size_t>(k)];
        return (lambda * std::cos(ph) + z * std::cos(ph - kPi / 3.0)) * delta[static_cast<std::size_t>(k)];
    };
    Eigen::Matrix3d m;
    m(0, 0) = lambda - zeta[0];
    m(1, 1) = lambda - zeta[1];
    m(2, 2) = lambda - zeta[2];
    m(0, 1) = m(1, 0) = entry(2);
    m(0, 2) = m(2, 0) = entry(1);
    m(1, 2) = m(2, 1) = entry(0);
    return m;
}

std::array<double, 3> stationary_angles(double lambda, const std::array<double, 3>& zeta) {
    std::array<double, 3> phi{};
    for (int k = 0; k < 3; ++k) {
        double z = zeta[static_cast<std::size_t>(k)];
        double r2 = lambda * lambda + lambda * z + z * z;
        if (r2 <= 1e-30)
            throw std::runtime_error("stationary_angles: degenerate angle (lambda^2 + lambda zeta + zeta^2 ~ 0)");
        double r = 2.0 * std::sqrt(r2);
        phi[static_cast<std::size_t>(k)] =
            std::atan2(-std::sqrt(3.0) * z / r, (-2.0 * lambda - z) / r);
    }
    return phi;
}

DetPair det_m_identity(double lambda, const std::array<double, 3>& zeta,
                       const std::array<double, 3>& delta,
                       const std::array<double, 3>& phi_star) {
    DetPair out;
    out.numeric = coupling_matrix(lambda, zeta, delta, phi_star).determinant();
    double prod = 1.0, sum = 0.0, rad = 1.0;
    for (int j = 0; j < 3; ++j) {
        double z = zeta[static_cast<std::size_t>(j)];
        double d = delta[static_cast<std::size_t>(j)];
        prod *= lambda - z;
        sum += (lambda * lambda * lambda - z * z * z) * d * d;
        rad *= std::sqrt(lambda * lambda + lambda * z + z * z) * d;
    }
    out.closed = prod - sum - 2.0 * rad;
    return out;
}

cplx envelope_point(double alpha, const Order3Geometry& geo) {
    double lam = lambda0(alpha, geo);
    double dlam = lambda0_derivative(alpha, geo);
    double c = std::cos(alpha), s = std::sin(alpha);
    return {lam * c - dlam * s, lam * s + dlam * c};
}

cplx dual_cubic_eval(cplx u, cplx v, cplx w, double big_l) {
    return u * u * u - 3.0 * u * v * v - 4.0 * big_l * u * u * w - 4.0 * big_l * v * v * w +
           4.0 * w * w * w;
}

double dual_cubic_scale(double big_l) { return std::max({1.0, 4.0 * big_l, 4.0}); }

double SexticCurve::scale() const {
    return std::max({std::abs(p), std::abs(q), std::abs(c_mixed), std::abs(c_quartic),
                     std::abs(c_cubic), std::abs(c_quadratic), std::abs(c_const)});
}

SexticCurve sextic_coeffs(double big_l) {
    if (!(big_l > 0.75)) throw std::invalid_argument("sextic_coeffs: requires L > 3/4");
    SexticCurve c;
    c.big_l = big_l;
    double l3 = big_l * big_l * big_l;
    c.q = 27.0 / (64.0 * l3);
    c.p = 1.0 - c.q;
    c.c_mixed = -9.0 / (4.0 * big_l);
    c.c_quartic = 27.0 / (16.0 * big_l * big_l) - big_l;
    c.c_cubic = 2.0 - 27.0 / (64.0 * l3);
    c.c_quadratic = -9.0 / (8.0 * big_l);
    c.c_const = 27.0 / (256.0 * l3);
    return c;
}

double sextic_eval(double x, double y, const SexticCurve& curve) {
    double s = x * x + y * y;
    double t = x * x * x - 3.0 * x * y * y;
    return curve.p * s * s * s + curve.q * t * t + curve.c_mixed * s * t +
           curve.c_quartic * s * s + curve.c_cubic * t + curve.c_quadratic * s + curve.c_const;
}

std::array<double, 2> sextic_gradient(double x, double y, const SexticCurve& curve) {
    double s = x * x + y * y;
    double t = x * x * x - 3.0 * x * y * y;
    double sx = 2.0 * x, sy = 2.0 * y;
    double tx = 3.0 * x * x - 3.0 * y * y, ty = -6.0 * x * y;
    double common_s = 3.0 * curve.p * s * s + curve.c_mixed * t + 2.0 * curve.c_quartic * s +
                      curve.c_quadratic;
    double common_t = 2.0 * curve.q * t + curve.c_mixed * s + curve.c_cubic;
    return {common_s * sx + common_t * tx, common_s * sy + common_t * ty};
}

std::array<double, 7> sextic_on_axis(const SexticCurve& curve) {
    // Gamma(x, 0): s = x^2, t = x^3.
    return {curve.p + curve.q, curve.c_mixed, curve.c_quartic, curve.c_cubic,
            curve.c_quadratic, 0.0, curve.c_const};
}

SingularityReport singularity_report(const SexticCurve& curve) {
    SingularityReport rep;
    double r = 3.0 / (4.0 * curve.big_l);
    double scale = curve.scale();
    for (int k = 0; k < 3; ++k) {
        double ang = kTwoThirdsPi * static_cast<double>(k);
        CuspCheck c;
        c.x = r * std::cos(ang);
        c.y = r * std::sin(ang);
        auto g = sextic_gradient(c.x, c.y, curve);
        c.gradient_residual = std::hypot(g[0], g[1]) / scale;
        c.pass = c.gradient_residual <= 1e-8;
        rep.cusps[static_cast<std::size_t>(k)] = c;
        if (c.pass) ++rep.cusps_detected;
    }
    // Degree 6, class 3: d(d-1) - 2 tau - 3 kappa = 3 forces 2 tau + 3 kappa
    // = 27.  Only the three real cusps are verified numerically; the
    // remaining singularities are reported as the compatible splits.
    for (int kappa = rep.cusps_detected; 3 * kappa <= 27; ++kappa) {
        int rem = 27 - 3 * kappa;
        if (rem % 2 == 0) rep.plucker_splits.push_back({kappa, rem / 2});
    }
    rep.pass = rep.cusps_detected == 3;
    return rep;
}

FociReport foci_check(double big_l) {
    FociReport rep;
    double scale = dual_cubic_scale(big_l);
    int idx = 0;
    for (double sgn : {1.0, -1.0}) {
        // Circular point (1, sgn * i, 0) in homogeneous coordinates.
        cplx cx(1.0, 0.0), cy(0.0, sgn), cz(0.0, 0.0);
        for (int k = 0; k < 3; ++k) {
            double ang = kTwoThirdsPi * static_cast<double>(k);
            cplx fx(std::cos(ang), 0.0), fy(std::sin(ang), 0.0), fz(1.0, 0.0);
            // The joining line is the cross product of the two points.
            cplx lu = cy * fz - cz * fy;
            cplx lv = cz * fx - cx * fz;
            cplx lw = cx * fy - cy * fx;
            cplx val = dual_cubic_eval(lu, lv, lw, big_l);
            rep.line_residuals[static_cast<std::size_t>(idx++)] = std::abs(val) / scale;
        }
    }
    for (double v : rep.line_residuals) rep.worst = std::max(rep.worst, v);
    rep.pass = rep.worst <= 1e-12;
    return rep;
}

}  // namespace nrc
