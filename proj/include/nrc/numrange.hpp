#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "nrc/operator.hpp"

namespace nrc {

// One support-function sample: lambda = Lambda(alpha) = max Re(e^{-i alpha} w)
// over the compression's numerical range, and point = <T v, v> for the top
// eigenvector v of the Hermitian part, a boundary point on the support line.
struct SupportSample {
    double alpha = 0.0;
    double lambda = 0.0;
    cplx point;
};

// H(alpha) = (e^{-i alpha} T + (e^{-i alpha} T)^*) / 2.
Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& t, double alpha);

struct EigenPair {
    double lambda = 0.0;
    Eigen::VectorXcd vector;
    double residual = 0.0;  // ||H v - lambda v||
};

struct TopEigenOptions {
    double tol = 1e-11;       // relative residual target (scaled by ||H||)
    int dense_threshold = 96; // dense solve at or below this size
    std::uint64_t seed = 0;   // start-vector stream
};

// Largest eigenvalue and eigenvector of a Hermitian matrix.  Small matrices
// are solved densely; larger ones by Lanczos with full reorthogonalization,
// restarted deterministically from a seeded start vector.  The Krylov space
// may grow to the full dimension, so termination is guaranteed; failure to
// meet the residual target raises with the best residual attached.
EigenPair top_eigenpair(const Eigen::MatrixXcd& h, const TopEigenOptions& opt = {});

// Both spectral ends from one Krylov sweep (used by antipodal angle pairs).
struct ExtremeEigenPairs {
    EigenPair top;
    EigenPair bottom;
};
ExtremeEigenPairs extreme_eigenpairs(const Eigen::MatrixXcd& h, const TopEigenOptions& opt = {});

struct SweepOptions {
    TopEigenOptions eigen;
    bool exploit_antipodal = true;  // one solve per (alpha, alpha + pi) pair
    int max_threads = 0;            // 0 = NRC_THREADS / hardware budget
};

// Support-function sweep over the given angles (sorted output).  Each angle
// is independent; results are merged in input order, so the output does not
// depend on the thread count.
std::vector<SupportSample> support_function(const OperatorMatrix& t,
                                            std::span<const double> angles,
                                            const SweepOptions& opt = {});

std::vector<double> uniform_angles(int count);

// Reconstructed convex boundary: vertex i is the intersection of the support
// lines at consecutive angles (wrapping around).
struct BoundaryPolyline {
    std::vector<cplx> points;
    bool closed = true;

    bool is_convex(double tol = 1e-9) const;
};

BoundaryPolyline hull_from_support(std::span<const SupportSample> samples);

// Symmetric Hausdorff distance between two polylines (max point-to-segment
// distance, both directions).
double hausdorff(const BoundaryPolyline& a, const BoundaryPolyline& b);

// max_alpha |Lambda(alpha) - Lambda(alpha + 2 pi / p)| over a shift-closed
// uniform grid; the numerical range of C_phi is invariant under rotation by
// 2 pi / p, so this measures how well the compression inherits the symmetry.
double symmetry_defect(std::span<const SupportSample> samples, int p);

}  // namespace nrc
