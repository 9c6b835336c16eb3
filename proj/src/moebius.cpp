#include "nrc/moebius.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace nrc {

namespace {
constexpr double kDegenerateTol = 1e-14;
}

MoebiusMap MoebiusMap::from_matrix(const Eigen::Matrix2cd& m) {
    double scale = m.norm();
    if (!(scale > 0.0) || !m.allFinite())
        throw std::invalid_argument("MoebiusMap: matrix must be finite and nonzero");
    Eigen::Matrix2cd n = m / scale;
    if (std::abs(n.determinant()) < kDegenerateTol)
        throw std::invalid_argument("MoebiusMap: degenerate matrix (det ~ 0)");
    return MoebiusMap(n);
}

MoebiusMap MoebiusMap::identity() {
    return from_matrix(Eigen::Matrix2cd::Identity());
}

MoebiusMap MoebiusMap::rotation(cplx w) {
    Eigen::Matrix2cd m;
    m << w, 0.0, 0.0, 1.0;
    return from_matrix(m);
}

MoebiusMap MoebiusMap::disk_involution(cplx a) {
    if (std::abs(a) >= 1.0)
        throw std::invalid_argument("disk_involution: |a| must be < 1");
    Eigen::Matrix2cd m;
    m << -1.0, a, -std::conj(a), 1.0;
    return from_matrix(m);
}

cplx MoebiusMap::operator()(cplx z) const {
    return (m_(0, 0) * z + m_(0, 1)) / (m_(1, 0) * z + m_(1, 1));
}

cplx MoebiusMap::derivative(cplx z) const {
    cplx den = m_(1, 0) * z + m_(1, 1);
    return m_.determinant() / (den * den);
}

bool MoebiusMap::has_finite_pole() const {
    return std::abs(m_(1, 0)) > kDegenerateTol;
}

cplx MoebiusMap::pole() const {
    if (!has_finite_pole()) return {std::numeric_limits<double>::infinity(), 0.0};
    return -m_(1, 1) / m_(1, 0);
}

MoebiusMap MoebiusMap::inverse() const {
    Eigen::Matrix2cd inv;
    inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return from_matrix(inv);
}

double MoebiusMap::identity_residual() const {
    // Residual of the best scalar fit t*I to the normalized matrix.
    cplx t = (m_(0, 0) + m_(1, 1)) / 2.0;
    Eigen::Matrix2cd d = m_ - t * Eigen::Matrix2cd::Identity();
    return d.norm();
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
    return MoebiusMap::from_matrix(f.matrix() * g.matrix());
}

MoebiusMap moebius_power(const MoebiusMap& f, int k) {
    if (k < 0) throw std::invalid_argument("moebius_power: negative exponent");
    MoebiusMap acc = MoebiusMap::identity();
    for (int i = 0; i < k; ++i) acc = compose(acc, f);
    return acc;
}

cplx EllipticSymbol::multiplier() const {
    double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
    return {std::cos(t), std::sin(t)};
}

EllipticSymbol elliptic_symbol(cplx a, int p, int k) {
    if (p < 2) throw std::invalid_argument("elliptic_symbol: order must be >= 2");
    if (k < 1 || k >= p || std::gcd(k, p) != 1)
        throw std::invalid_argument("elliptic_symbol: multiplier index must satisfy 1 <= k < p, gcd(k, p) = 1");
    if (std::abs(a) >= 1.0)
        throw std::invalid_argument("elliptic_symbol: fixed point must satisfy |a| < 1");

    EllipticSymbol sym;
    sym.a = a;
    sym.p = p;
    sym.k = k;
    MoebiusMap rot = MoebiusMap::rotation(sym.multiplier());
    if (std::abs(a) == 0.0) {
        sym.map = rot;
    } else {
        MoebiusMap inv = MoebiusMap::disk_involution(a);
        sym.map = compose(inv, compose(rot, inv));
    }
    if (std::abs(a) > 0.95)
        sym.warning = "fixed point near the unit circle (|a| > 0.95): expect slow coefficient decay";
    return sym;
}

int default_truncation(cplx a) {
    double r = std::abs(a);
    if (r <= 0.6) return 256;
    if (r <= 0.8) return 512;
    return 1024;
}

}  // namespace nrc
