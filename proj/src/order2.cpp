#include "nrc/order2.hpp"

#include <cmath>
#include <stdexcept>

namespace nrc {

EllipseModel ellipse_params(cplx a) {
    double r = std::abs(a);
    if (r == 0.0)
        throw std::invalid_argument("ellipse_params: a = 0 (range degenerates toward the segment [-1, 1])");
    if (r >= 1.0) throw std::invalid_argument("ellipse_params: |a| must be < 1");
    EllipseModel m;
    m.a = a;
    m.semi_major = (1.0 + r * r) / (1.0 - r * r);
    m.semi_minor = 2.0 * r / (1.0 - r * r);
    return m;
}

double ellipse_support(const EllipseModel& model, double alpha) {
    double c = std::cos(alpha), s = std::sin(alpha);
    return std::sqrt(model.semi_major * model.semi_major * c * c +
                     model.semi_minor * model.semi_minor * s * s);
}

cplx ellipse_boundary_point(const EllipseModel& model, double alpha) {
    double lam = ellipse_support(model, alpha);
    double c = std::cos(alpha), s = std::sin(alpha);
    return {model.semi_major * model.semi_major * c / lam,
            model.semi_minor * model.semi_minor * s / lam};
}

PairCorrelation pair_correlation(const TaylorSeries& f1, const TaylorSeries& f2) {
    double n1 = f1.norm(), n2 = f2.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0))
        throw std::invalid_argument("pair_correlation: zero vector");
    cplx ip = inner_product(f1, f2) / (n1 * n2);
    return {std::abs(ip), std::arg(ip)};
}

Order2Workspace::Order2Workspace(const EllipticSymbol& sym, int basis_count, int n)
    : sym_(sym), n_(n) {
    if (sym.p != 2) throw std::invalid_argument("Order2Workspace: symbol must have order 2");
    tail_ = eigenspace_tail_bound(sym.a, 2, basis_count, n);
    for (int r = 0; r < 2; ++r) {
        basis_[static_cast<std::size_t>(r)] = eigenspace_basis(sym, r, basis_count, n);
        const auto& vecs = basis_[static_cast<std::size_t>(r)];
        Eigen::MatrixXcd b(n, static_cast<Eigen::Index>(vecs.size()));
        for (std::size_t j = 0; j < vecs.size(); ++j) b.col(static_cast<Eigen::Index>(j)) = to_vector(vecs[j]);
        stacked_[static_cast<std::size_t>(r)] = b;
        gram_[static_cast<std::size_t>(r)].compute(b.adjoint() * b);
    }
}

Order2Workspace::Split Order2Workspace::split(const TaylorSeries& f) const {
    Eigen::VectorXcd v = to_vector(f);
    Split out;
    Eigen::VectorXcd remainder = v;
    for (int r = 0; r < 2; ++r) {
        const Eigen::MatrixXcd& b = stacked_[static_cast<std::size_t>(r)];
        Eigen::VectorXcd coeffs = gram_[static_cast<std::size_t>(r)].solve(b.adjoint() * v);
        Eigen::VectorXcd proj = b * coeffs;
        double nsq = proj.squaredNorm();
        if (r == 0)
            out.norm1_sq = nsq;
        else
            out.norm2_sq = nsq;
        remainder -= proj;
    }
    out.residual = remainder.norm();
    return out;
}

ExclusionStat exclusion_statistic(const OperatorMatrix& t_adj, const TaylorSeries& f,
                                  const Order2Workspace& ws) {
    if (t_adj.size() != f.size())
        throw std::invalid_argument("exclusion_statistic: size mismatch between operator and vector");
    double nf = f.norm();
    if (std::abs(nf - 1.0) > 1e-8)
        throw std::invalid_argument("exclusion_statistic: f must be a unit vector");

    Eigen::VectorXcd v = to_vector(f);
    ExclusionStat out;
    out.q = v.dot(t_adj.entries * v);
    out.s = 0.5 * (std::abs(1.0 - out.q) + std::abs(1.0 + out.q));

    Order2Workspace::Split sp = ws.split(f);
    double lhs = 0.25 * (std::norm(1.0 - out.q) - std::norm(1.0 + out.q));
    out.id21_residual = std::abs(lhs - (sp.norm2_sq - sp.norm1_sq));
    out.projection_residual = sp.residual;
    return out;
}

std::vector<cplx> near_extremal_weights(cplx a, double rho, int count) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("near_extremal_weights: rho must lie in (0, 1)");
    if (count < 1) throw std::invalid_argument("near_extremal_weights: count must be >= 1");
    double phase = -2.0 * std::arg(a);
    std::vector<cplx> w(static_cast<std::size_t>(count));
    double mass = 1.0 - rho;
    for (int j = 0; j < count; ++j) {
        double mag = std::sqrt(mass * std::pow(rho, j));
        w[static_cast<std::size_t>(j)] = std::polar(mag, phase * static_cast<double>(j));
    }
    return w;
}

}  // namespace nrc
