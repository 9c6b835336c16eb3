#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "nrc/moebius.hpp"
#include "nrc/series.hpp"

namespace nrc {

enum class BasisTag { monomial, guyker };

// Dense N x N compression of the composition operator (or its adjoint).
// In the monomial basis, column k holds the Taylor coefficients of phi^k.
// In the Guyker basis the entries come from the closed-form action of the
// adjoint on e_j = k_a phi_a^j, which spans an invariant subspace; that
// matrix is an exact compression, free of series truncation error.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    BasisTag basis = BasisTag::monomial;
    EllipticSymbol symbol;

    int size() const { return static_cast<int>(entries.rows()); }
};

OperatorMatrix composition_matrix(const EllipticSymbol& sym, int n);
OperatorMatrix guyker_matrix(const EllipticSymbol& sym, int n);
OperatorMatrix adjoint(const OperatorMatrix& t);

// First j_count Guyker vectors e_j = k_a phi_a^j as truncated coefficient
// vectors.  Orthonormal up to a truncation error of order |a|^(N - J).
struct GuykerBasis {
    cplx a;
    int n = 0;
    std::vector<TaylorSeries> vectors;

    // max_ij |<e_i, e_j> - delta_ij|
    double gram_deviation() const;
};

GuykerBasis guyker_basis(cplx a, int j_count, int n);

// Basis of the eigenspace of the adjoint with eigenvalue conj(phi'(a))^r:
// normalized vectors (e_{p j + r} - a e_{p j + r - 1}) / sqrt(1 + |a|^2),
// j = 0 .. j_max - 1, with e_{-1} = 0 (so the first r = 0 vector is e_0).
// Requires a != 0; the rotation case is diagonal and needs no such basis.
std::vector<TaylorSeries> eigenspace_basis(const EllipticSymbol& sym, int r, int j_max, int n);

// Upper bound (Cauchy estimate over circles 1 < rho < 1/|a|) on the l2 mass
// of the coefficients of e_j = k_a phi_a^j at indices >= n.  The coefficient
// support of a degree-j Blaschke power extends to roughly j (1+|a|)/(1-|a|),
// so this decays only once n clears that spread.
double guyker_tail_bound(double r, int j, int n);

// Smallest truncation (doubling search) at which guyker_tail_bound for the
// top index drops below eps.
int series_budget(cplx a, int top_index, double eps);

// Conservative tail bound for unit combinations of eigenspace_basis vectors.
double eigenspace_tail_bound(cplx a, int p, int j_max, int n);

// Truncation giving eigenspace bases with tails below ~1e-11.
int eigenspace_truncation(cplx a, int p, int j_max);

// Normalized linear combination sum_j coeffs[j] * basis[j].
TaylorSeries eigenspace_sample(std::span<const TaylorSeries> basis, std::span<const cplx> coeffs);

Eigen::VectorXcd to_vector(const TaylorSeries& s);
TaylorSeries from_vector(const Eigen::VectorXcd& v);

}  // namespace nrc
