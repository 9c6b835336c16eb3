#include "nrc/operator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nrc {

OperatorMatrix composition_matrix(const EllipticSymbol& sym, int n) {
    if (n < 2) throw std::invalid_argument("composition_matrix: need N >= 2");
    OperatorMatrix out;
    out.basis = BasisTag::monomial;
    out.symbol = sym;
    out.entries.resize(n, n);

    // Column k = coefficients of phi^k, built incrementally; each step is an
    // O(N) Moebius multiply, so the whole matrix costs O(N^2).
    TaylorSeries col(n);
    col.coeff(0) = 1.0;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) out.entries(i, k) = col.coeff(i);
        if (k + 1 < n) col = moebius_multiply(col, sym.map);
    }
    return out;
}

OperatorMatrix guyker_matrix(const EllipticSymbol& sym, int n) {
    if (n < 2) throw std::invalid_argument("guyker_matrix: need N >= 2");
    if (std::abs(sym.a) == 0.0)
        throw std::invalid_argument("guyker_matrix: a = 0 (use the monomial basis for rotations)");
    OperatorMatrix out;
    out.basis = BasisTag::guyker;
    out.symbol = sym;

    // The adjoint fixes span{e_0, ..., e_{n-1}} and acts there by
    //   A[i][m] = a^(m-i) mu^i (1 - mu)   for i < m,
    //   A[m][m] = mu^m,
    // with mu = conj(phi'(a)).  The compression of the operator itself is
    // the conjugate transpose.
    cplx a = sym.a;
    cplx mu = std::conj(sym.multiplier());
    std::vector<cplx> apow(static_cast<std::size_t>(n));
    apow[0] = 1.0;
    for (int d = 1; d < n; ++d) apow[static_cast<std::size_t>(d)] = apow[static_cast<std::size_t>(d - 1)] * a;
    // mu^m is exactly periodic mod p; evaluate each residue once.
    std::vector<cplx> mures(static_cast<std::size_t>(sym.p));
    for (int j = 0; j < sym.p; ++j) {
        double t = -2.0 * std::numbers::pi * static_cast<double>(sym.k) * static_cast<double>(j) / static_cast<double>(sym.p);
        mures[static_cast<std::size_t>(j)] = {std::cos(t), std::sin(t)};
    }
    auto mupow = [&](int m) { return mures[static_cast<std::size_t>(m % sym.p)]; };
    Eigen::MatrixXcd adj = Eigen::MatrixXcd::Zero(n, n);
    for (int m = 0; m < n; ++m) {
        for (int i = 0; i < m; ++i)
            adj(i, m) = apow[static_cast<std::size_t>(m - i)] * mupow(i) * (1.0 - mu);
        adj(m, m) = mupow(m);
    }
    out.entries = adj.adjoint();
    return out;
}

OperatorMatrix adjoint(const OperatorMatrix& t) {
    OperatorMatrix out = t;
    out.entries = t.entries.adjoint();
    return out;
}

double GuykerBasis::gram_deviation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i; j < vectors.size(); ++j) {
            cplx g = inner_product(vectors[i], vectors[j]);
            double dev = std::abs(g - (i == j ? cplx(1.0) : cplx(0.0)));
            worst = std::max(worst, dev);
        }
    return worst;
}

GuykerBasis guyker_basis(cplx a, int j_count, int n) {
    if (std::abs(a) >= 1.0) throw std::invalid_argument("guyker_basis: |a| must be < 1");
    if (j_count < 1 || n < 2) throw std::invalid_argument("guyker_basis: need J >= 1, N >= 2");
    if (2 * j_count > n)
        throw std::invalid_argument("guyker_basis: need J <= N/2 to keep truncation error small");
    GuykerBasis out;
    out.a = a;
    out.n = n;
    out.vectors.reserve(static_cast<std::size_t>(j_count));
    MoebiusMap inv = MoebiusMap::disk_involution(a);
    TaylorSeries e = kernel_series(a, n);
    for (int j = 0; j < j_count; ++j) {
        out.vectors.push_back(e);
        if (j + 1 < j_count) e = moebius_multiply(e, inv);
    }
    return out;
}

std::vector<TaylorSeries> eigenspace_basis(const EllipticSymbol& sym, int r, int j_max, int n) {
    if (std::abs(sym.a) == 0.0)
        throw std::invalid_argument("eigenspace_basis: a = 0 degenerates the Guyker construction");
    if (r < 0 || r >= sym.p) throw std::invalid_argument("eigenspace_basis: need 0 <= r < p");
    if (j_max < 1) throw std::invalid_argument("eigenspace_basis: need Jmax >= 1");
    int top_index = sym.p * (j_max - 1) + r;
    if (2 * (top_index + 1) > n)
        throw std::invalid_argument("eigenspace_basis: truncation too small for requested Jmax");

    MoebiusMap inv = MoebiusMap::disk_involution(sym.a);
    double scale = 1.0 / std::sqrt(1.0 + std::norm(sym.a));
    std::vector<TaylorSeries> out;
    out.reserve(static_cast<std::size_t>(j_max));

    TaylorSeries e = kernel_series(sym.a, n);  // e_0
    TaylorSeries prev(n);                      // e_{-1} = 0
    for (int m = 0; m <= top_index; ++m) {
        if (m % sym.p == r) {
            TaylorSeries v = e;
            for (int i = 0; i < n; ++i) v.coeff(i) -= sym.a * prev.coeff(i);
            if (m == 0) {
                out.push_back(v);  // e_0 itself is already unit-norm
            } else {
                v *= scale;
                out.push_back(v);
            }
        }
        prev = e;
        e = moebius_multiply(e, inv);
    }
    return out;
}

double guyker_tail_bound(double r, int j, int n) {
    if (r <= 0.0) return n > j ? 0.0 : 1.0;
    if (r >= 1.0) return 1.0;
    // coeff_i(k_a phi_a^j) <= K(rho) M(rho)^j rho^{-i} for 1 < rho < 1/r,
    // where M is the max of |phi_a| and K the max of |k_a| on |z| = rho.
    // Work in logs; the vectors are unit, so 1 always bounds the tail.
    double best_log = 0.0;
    const int grid = 96;
    for (int g = 1; g < grid; ++g) {
        double rho = 1.0 + (1.0 / r - 1.0) * static_cast<double>(g) / grid;
        double m = std::max((rho - r) / (1.0 - r * rho), (r + rho) / (1.0 + r * rho));
        double k = std::sqrt(1.0 - r * r) / (1.0 - r * rho);
        double log_bound = std::log(k) + j * std::log(m) - n * std::log(rho) -
                           0.5 * std::log(1.0 - 1.0 / (rho * rho));
        best_log = std::min(best_log, log_bound);
    }
    return std::exp(best_log);
}

int series_budget(cplx a, int top_index, double eps) {
    double r = std::abs(a);
    int n = std::max(64, 2 * (top_index + 1));
    while (n < (1 << 21)) {
        if (guyker_tail_bound(r, top_index, n) <= eps) return n;
        n += std::max(64, n / 2);
    }
    throw std::runtime_error("series_budget: no feasible truncation below 2^21");
}

double eigenspace_tail_bound(cplx a, int p, int j_max, int n) {
    double r = std::abs(a);
    if (r == 0.0) return 0.0;
    int top_index = p * (j_max - 1) + (p - 1);
    double per_vector = 2.0 * guyker_tail_bound(r, top_index, n);
    return std::min(1.0, 3.0 * std::sqrt(static_cast<double>(j_max)) * per_vector);
}

int eigenspace_truncation(cplx a, int p, int j_max) {
    int top_index = p * (j_max - 1) + (p - 1);
    return series_budget(a, top_index, 1e-13);
}

Eigen::VectorXcd to_vector(const TaylorSeries& s) {
    Eigen::VectorXcd v(s.size());
    for (int i = 0; i < s.size(); ++i) v(i) = s.coeff(i);
    return v;
}

TaylorSeries from_vector(const Eigen::VectorXcd& v) {
    std::vector<cplx> c(v.data(), v.data() + v.size());
    return TaylorSeries(std::move(c));
}

TaylorSeries eigenspace_sample(std::span<const TaylorSeries> basis, std::span<const cplx> coeffs) {
    if (basis.empty() || coeffs.size() != basis.size())
        throw std::invalid_argument("eigenspace_sample: basis/coefficient size mismatch");
    double total = 0.0;
    for (const cplx& c : coeffs) total += std::norm(c);
    if (!(total > 0.0)) throw std::invalid_argument("eigenspace_sample: zero coefficient vector");

    TaylorSeries acc(basis[0].size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].size() != acc.size())
            throw std::invalid_argument("eigenspace_sample: mismatched truncation orders");
        for (int i = 0; i < acc.size(); ++i) acc.coeff(i) += coeffs[j] * basis[j].coeff(i);
    }
    double nrm = acc.norm();
    if (!(nrm > 0.0)) throw std::invalid_argument("eigenspace_sample: combination is numerically zero");
    acc *= cplx(1.0 / nrm);
    return acc;
}

}  // namespace nrc
