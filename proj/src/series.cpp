#include "nrc/series.hpp"

#include <cmath>
#include <stdexcept>

namespace nrc {

TaylorSeries::TaylorSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TaylorSeries: empty coefficient vector");
    if (!all_finite()) throw std::invalid_argument("TaylorSeries: non-finite coefficient");
}

double TaylorSeries::norm() const {
    double s = 0.0;
    for (const cplx& z : c_) s += std::norm(z);
    return std::sqrt(s);
}

bool TaylorSeries::all_finite() const {
    for (const cplx& z : c_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& rhs) {
    if (rhs.size() != size()) throw std::invalid_argument("TaylorSeries: mismatched truncation orders");
    for (int n = 0; n < size(); ++n) c_[static_cast<std::size_t>(n)] += rhs.coeff(n);
    return *this;
}

TaylorSeries& TaylorSeries::operator*=(cplx s) {
    for (cplx& z : c_) z *= s;
    return *this;
}

TaylorSeries series_multiply(const TaylorSeries& u, const TaylorSeries& v) {
    if (u.size() != v.size()) throw std::invalid_argument("series_multiply: mismatched truncation orders");
    int n = u.size();
    TaylorSeries out(n);
    for (int i = 0; i < n; ++i) {
        cplx acc = 0.0;
        for (int j = 0; j <= i; ++j) acc += u.coeff(j) * v.coeff(i - j);
        out.coeff(i) = acc;
    }
    return out;
}

TaylorSeries series_power(const TaylorSeries& u, int k) {
    if (k < 0) throw std::invalid_argument("series_power: negative exponent");
    TaylorSeries acc(u.size());
    acc.coeff(0) = 1.0;
    for (int i = 0; i < k; ++i) acc = series_multiply(acc, u);
    return acc;
}

TaylorSeries moebius_multiply(const TaylorSeries& f, const MoebiusMap& m) {
    const Eigen::Matrix2cd& M = m.matrix();
    cplx a = M(0, 0), b = M(0, 1), c = M(1, 0), d = M(1, 1);
    if (std::abs(d) < 1e-300) throw std::invalid_argument("moebius_multiply: map has a pole at 0");
    int n = f.size();
    TaylorSeries g(n);
    // (c z + d) g = (a z + b) f  =>  g_k = (b f_k + a f_{k-1} - c g_{k-1}) / d.
    g.coeff(0) = b * f.coeff(0) / d;
    for (int k = 1; k < n; ++k)
        g.coeff(k) = (b * f.coeff(k) + a * f.coeff(k - 1) - c * g.coeff(k - 1)) / d;
    return g;
}

TaylorSeries moebius_to_series(const MoebiusMap& f, int n) {
    if (n < 1) throw std::invalid_argument("moebius_to_series: truncation order must be >= 1");
    if (f.has_finite_pole() && std::abs(f.pole()) <= 1.0)
        throw std::invalid_argument("moebius_to_series: pole inside the closed unit disk");
    TaylorSeries one(n);
    one.coeff(0) = 1.0;
    return moebius_multiply(one, f);
}

TaylorSeries kernel_series(cplx w, int n) {
    if (std::abs(w) >= 1.0) throw std::invalid_argument("kernel_series: |w| must be < 1");
    TaylorSeries out(n);
    double scale = std::sqrt(1.0 - std::norm(w));
    cplx wb = std::conj(w);
    cplx pow = 1.0;
    for (int i = 0; i < n; ++i) {
        out.coeff(i) = scale * pow;
        pow *= wb;
    }
    return out;
}

cplx inner_product(const TaylorSeries& u, const TaylorSeries& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner_product: mismatched truncation orders");
    cplx acc = 0.0;
    for (int i = 0; i < u.size(); ++i) acc += u.coeff(i) * std::conj(v.coeff(i));
    return acc;
}

}  // namespace nrc
