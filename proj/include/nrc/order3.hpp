#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "nrc/moebius.hpp"

namespace nrc {

// Derived constants for an order-3 symbol with fixed point a != 0.
// Delta = |a| / (1 + |a|^2) lies in (0, 1/2); L depends only on |a| and
// satisfies L > 3/4, blowing up as |a| -> 1.
struct Order3Geometry {
    cplx a;
    double delta = 0.0;
    double big_l = 0.0;
    bool near_unit_warning = false;  // |a| > 0.95
};

Order3Geometry geometry_of(cplx a);

// (cos a, cos(a - 2 pi/3), cos(a + 2 pi/3)): the roots of T3(z) = cos(3 a)
// with T3 the degree-3 Chebyshev polynomial 4 z^3 - 3 z.
std::array<double, 3> chebyshev_zeta(double alpha);

// Support function of the order-3 numerical range: the largest real root of
//   lambda^3 - L lambda = cos^3 a - (3/4) cos a.
// The root is re-validated against the radical form of the support equation
// (principal square roots); a residual above 1e-9 raises, which guards
// against picking up a root introduced by the squaring step that produced
// the cubic.
double lambda0(double alpha, const Order3Geometry& geo);

// d lambda0 / d alpha by implicit differentiation.
double lambda0_derivative(double alpha, const Order3Geometry& geo);

// Largest positive root lambda of
//   prod_j (lambda - zeta_j) - sum_j (lambda^3 - zeta_j^3) delta_j^2
//     - 2 prod_j sqrt(lambda^2 + lambda zeta_j + zeta_j^2) delta_j = 0
// for the given correlation triple; zeta defaults to chebyshev_zeta(alpha).
// The bracket is [max zeta_j, 1 + sum delta_j + L]; no sign change raises.
double lambda_prime(double alpha, const std::array<double, 3>& delta, const Order3Geometry& geo);
double lambda_prime_zeta(const std::array<double, 3>& zeta, const std::array<double, 3>& delta,
                         const Order3Geometry& geo);

// The symmetric 3x3 matrix whose positive-definiteness governs the support
// bound, evaluated at angle triple phi.
Eigen::Matrix3d coupling_matrix(double lambda, const std::array<double, 3>& zeta,
                                const std::array<double, 3>& delta, const std::array<double, 3>& phi);

// Minimizing angles Phi(lambda): sin Phi_k = -sqrt(3) zeta_k / (2 R_k),
// cos Phi_k = (-2 lambda - zeta_k) / (2 R_k), R_k^2 = lambda^2 + lambda
// zeta_k + zeta_k^2.  Degenerate R_k ~ 0 raises.
std::array<double, 3> stationary_angles(double lambda, const std::array<double, 3>& zeta);

// Determinant of coupling_matrix at phi_star, evaluated two ways: the
// numeric 3x3 determinant and the closed form it must equal at the
// minimizing angles.
struct DetPair {
    double numeric = 0.0;
    double closed = 0.0;
};
DetPair det_m_identity(double lambda, const std::array<double, 3>& zeta,
                       const std::array<double, 3>& delta, const std::array<double, 3>& phi_star);

// Boundary point traced by the support-line envelope at angle alpha.
cplx envelope_point(double alpha, const Order3Geometry& geo);

// Tangential cubic u^3 - 3 u v^2 - 4 L u^2 w - 4 L v^2 w + 4 w^3 in dual
// coordinates; support lines (cos a, sin a, -lambda0(a)) lie on it.
cplx dual_cubic_eval(cplx u, cplx v, cplx w, double big_l);
double dual_cubic_scale(double big_l);  // max |coefficient|, for residual scaling

// Degree-6 boundary curve in the rotation-invariant basis
// {(x^2+y^2)^nu (x^3-3xy^2)^tau : 2 nu + 3 tau <= 6}.
struct SexticCurve {
    double big_l = 0.0;
    double p = 0.0;          // (x^2+y^2)^3
    double q = 0.0;          // (x^3-3xy^2)^2, p + q = 1
    double c_mixed = 0.0;    // (x^2+y^2)(x^3-3xy^2)
    double c_quartic = 0.0;  // (x^2+y^2)^2
    double c_cubic = 0.0;    // (x^3-3xy^2)
    double c_quadratic = 0.0;// (x^2+y^2)
    double c_const = 0.0;

    double scale() const;  // max |coefficient|
};

SexticCurve sextic_coeffs(double big_l);
double sextic_eval(double x, double y, const SexticCurve& curve);
std::array<double, 2> sextic_gradient(double x, double y, const SexticCurve& curve);

// Coefficients of the restriction to the real axis, degree 6 down to 0.
std::array<double, 7> sextic_on_axis(const SexticCurve& curve);

struct CuspCheck {
    double x = 0.0;
    double y = 0.0;
    double gradient_residual = 0.0;  // |grad Gamma| / scale
    bool pass = false;
};

struct SingularityReport {
    std::array<CuspCheck, 3> cusps;          // (3/(4L), 0) and its rotations
    int cusps_detected = 0;
    // Integer solutions of 2 tau + 3 kappa = 27 with kappa >= cusps_detected:
    // the splits compatible with a class-3 dual of a degree-6 curve.
    std::vector<std::array<int, 2>> plucker_splits;  // {kappa, tau}
    bool pass = false;
};

SingularityReport singularity_report(const SexticCurve& curve);

struct FociReport {
    // |cubic(line)| / scale for the six lines joining the circular points
    // (1, +-i, 0) to the three unit cube roots; all must vanish.
    std::array<double, 6> line_residuals{};
    double worst = 0.0;
    bool pass = false;
};

FociReport foci_check(double big_l);

}  // namespace nrc
