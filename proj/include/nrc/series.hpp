#pragma once

#include <complex>
#include <vector>

#include "nrc/moebius.hpp"

namespace nrc {

// Truncated Taylor series about 0: coeff(n) multiplies z^n, n < size().
// Plain dense complex vector; all arithmetic is O(N^2) Cauchy products,
// which is fine at the truncation sizes used here (N <= a few thousand).
class TaylorSeries {
public:
    TaylorSeries() = default;
    explicit TaylorSeries(int n) : c_(static_cast<std::size_t>(n)) {
        if (n < 1) throw std::invalid_argument("TaylorSeries: truncation order must be >= 1");
    }
    explicit TaylorSeries(std::vector<cplx> coeffs);

    int size() const { return static_cast<int>(c_.size()); }
    cplx coeff(int n) const { return c_[static_cast<std::size_t>(n)]; }
    cplx& coeff(int n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<cplx>& coeffs() const { return c_; }

    double norm() const;      // l2 norm of the coefficient vector
    bool all_finite() const;

    TaylorSeries& operator+=(const TaylorSeries& rhs);
    TaylorSeries& operator*=(cplx s);

private:
    std::vector<cplx> c_;
};

TaylorSeries series_multiply(const TaylorSeries& u, const TaylorSeries& v);
TaylorSeries series_power(const TaylorSeries& u, int k);

// Multiplication by a Moebius map's series in O(N) using the two-term
// recurrence forced by (c z + d) g = (a z + b) f.  Agrees exactly with
// series_multiply(f, moebius_to_series(m, N)); used where many Guyker
// vectors are built incrementally.
TaylorSeries moebius_multiply(const TaylorSeries& f, const MoebiusMap& m);

// Taylor expansion of a Moebius self-map of the disk about 0.  Requires the
// pole to lie strictly outside the closed unit disk.
TaylorSeries moebius_to_series(const MoebiusMap& f, int n);

// Coefficients of the normalized reproducing kernel at w:
// coeff(n) = sqrt(1 - |w|^2) conj(w)^n.  Requires |w| < 1.
TaylorSeries kernel_series(cplx w, int n);

// Hardy-space inner product sum_n u_n conj(v_n); truncations must match.
cplx inner_product(const TaylorSeries& u, const TaylorSeries& v);

}  // namespace nrc
