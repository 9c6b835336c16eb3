#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nrc/operator.hpp"
#include "nrc/report.hpp"

namespace nrc {

// Normalized pairwise correlations between nonzero vectors f1, f2, f3 drawn
// from the three adjoint eigenspaces of an order-3 symbol (f_k from the
// residue class r = k - 1):
//   delta1 e^{i theta1} = <f2, f3> / (||f2|| ||f3||)
//   delta2 e^{i theta2} = <f3, f1> / (||f3|| ||f1||)
//   delta3 e^{i theta3} = <f1, f2> / (||f1|| ||f2||)
struct CorrelationTriple {
    std::array<double, 3> delta{};
    std::array<double, 3> theta{};
    std::string provenance;
    std::uint64_t seed = 0;
    double eps_trunc = 0.0;
};

CorrelationTriple correlation_triple(const TaylorSeries& f1, const TaylorSeries& f2,
                                     const TaylorSeries& f3);

// Unit vectors in the three eigenspaces built from geometric weight
// sequences; their normalized correlations approach
//   (-e^{i theta1} D, -e^{i theta2} D, -e^{i theta3} D sqrt(rho)),
// D = |a|/(1+|a|^2), as the tail rho^J vanishes.  Requires 0 < rho < 1 and
// N comfortably above 3J.
std::array<TaylorSeries, 3> extremal_family(const std::array<double, 3>& theta, double rho,
                                            cplx a, int j_count, int n);

// Residuals of the two quadratic-form identities tying the correlations to
// the compressed adjoint:
//   residual1: <T* f, f> against its assembly from (norms, delta, theta)
//   residual2: ||f||^2 against norms plus 2 Re of the cross terms
// with f = f1 + f2 + f3.
struct QuadraticFormResiduals {
    double residual1 = 0.0;
    double residual2 = 0.0;
};

QuadraticFormResiduals quadratic_form_identity(const EllipticSymbol& sym, const TaylorSeries& f1,
                                               const TaylorSeries& f2, const TaylorSeries& f3,
                                               const OperatorMatrix& t_adj);

// The coupling-matrix machinery fixes the eigenvalue orientation
// mu = e^{2 pi i / 3}; for symbols whose adjoint multiplier is the other
// primitive root the group data must be relabeled (swap slots 2 and 3 and
// negate the phases) before pairing with chebyshev_zeta.
struct DisplayTriple {
    std::array<double, 3> norms{};
    std::array<double, 3> delta{};
    std::array<double, 3> theta{};
};

DisplayTriple display_correlation(const EllipticSymbol& sym, const std::array<double, 3>& norms,
                                  const std::array<double, 3>& delta,
                                  const std::array<double, 3>& theta);

// Randomized + extremal sampling suite for the correlation bounds; see the
// CorrelationTriple invariants.  Deterministic for a given seed.
CheckReport observation_suite(cplx a, int trials, std::uint64_t seed);

}  // namespace nrc
