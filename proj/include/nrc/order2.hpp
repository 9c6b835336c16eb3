#pragma once

#include <Eigen/Cholesky>
#include <vector>

#include "nrc/operator.hpp"

namespace nrc {

// Closed-form boundary for order-2 symbols: the ellipse with foci +-1,
// semi-major axis A = (1 + |a|^2)/(1 - |a|^2) and semi-minor axis
// B = 2|a|/(1 - |a|^2), so that A^2 - B^2 = 1.
struct EllipseModel {
    cplx a;
    double semi_major = 0.0;
    double semi_minor = 0.0;
};

EllipseModel ellipse_params(cplx a);

// Support function sqrt(A^2 cos^2 + B^2 sin^2) of the axis-aligned ellipse.
double ellipse_support(const EllipseModel& model, double alpha);

// Tangency point of the support line at angle alpha.
cplx ellipse_boundary_point(const EllipseModel& model, double alpha);

struct PairCorrelation {
    double delta = 0.0;  // |<f1, f2>| / (||f1|| ||f2||)
    double theta = 0.0;  // arg <f1, f2>
};

PairCorrelation pair_correlation(const TaylorSeries& f1, const TaylorSeries& f2);

// Eigenspace bases of the compressed adjoint for an order-2 symbol plus the
// least-squares machinery used to split f = f1 + f2.
class Order2Workspace {
public:
    Order2Workspace(const EllipticSymbol& sym, int basis_count, int n);

    const std::vector<TaylorSeries>& plus_basis() const { return basis_[0]; }   // eigenvalue +1
    const std::vector<TaylorSeries>& minus_basis() const { return basis_[1]; }  // eigenvalue -1

    // Squared norms of the two least-squares projections of f, plus the norm
    // of what the truncated bases fail to capture.
    struct Split {
        double norm1_sq = 0.0;
        double norm2_sq = 0.0;
        double residual = 0.0;
    };
    Split split(const TaylorSeries& f) const;

    const EllipticSymbol& symbol() const { return sym_; }
    int truncation() const { return n_; }
    double tail_bound() const { return tail_; }

private:
    EllipticSymbol sym_;
    int n_ = 0;
    double tail_ = 0.0;
    std::array<std::vector<TaylorSeries>, 2> basis_;
    std::array<Eigen::MatrixXcd, 2> stacked_;
    std::array<Eigen::LDLT<Eigen::MatrixXcd>, 2> gram_;
};

// Boundary-exclusion statistic for a unit vector f: q = <T* f, f>, the
// elliptic coordinate s = (|1-q| + |1+q|)/2 (half the sum of distances to
// the foci), and the residual of the identity
//   |1-q|^2/4 - |1+q|^2/4 = ||f2||^2 - ||f1||^2.
// s < A for every unit f is the testable content of the range being the
// open ellipse.
struct ExclusionStat {
    cplx q;
    double s = 0.0;
    double id21_residual = 0.0;
    double projection_residual = 0.0;
};

ExclusionStat exclusion_statistic(const OperatorMatrix& t_adj, const TaylorSeries& f,
                                  const Order2Workspace& ws);

// Coefficients beta_j = e^{-2 i j arg(a)} sqrt((1 - rho) rho^j) whose
// eigenspace combinations drive the pair correlation toward its supremum
// 2|a|/(1+|a|^2) as rho -> 1.
std::vector<cplx> near_extremal_weights(cplx a, double rho, int count);

}  // namespace nrc
