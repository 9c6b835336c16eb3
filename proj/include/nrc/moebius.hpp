#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <string>

namespace nrc {

using cplx = std::complex<double>;

// Moebius transformation z -> (a z + b) / (c z + d), stored as the 2x2
// coefficient matrix ((a, b), (c, d)).  The matrix is normalized to unit
// Frobenius norm on construction; scaling does not change the map.
class MoebiusMap {
public:
    static MoebiusMap from_matrix(const Eigen::Matrix2cd& m);
    static MoebiusMap identity();
    static MoebiusMap rotation(cplx w);        // z -> w z, |w| = 1
    static MoebiusMap disk_involution(cplx a); // z -> (a - z) / (1 - conj(a) z)

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;

    // Pole -d/c; infinity (as a huge modulus sentinel) when c = 0.
    cplx pole() const;
    bool has_finite_pole() const;

    MoebiusMap inverse() const;

    // Frobenius distance of the normalized matrix from the nearest scalar
    // multiple of the identity; zero iff the map is the identity.
    double identity_residual() const;

    const Eigen::Matrix2cd& matrix() const { return m_; }

private:
    explicit MoebiusMap(const Eigen::Matrix2cd& m) : m_(m) {}
    Eigen::Matrix2cd m_;
};

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);
MoebiusMap moebius_power(const MoebiusMap& f, int k);

// Elliptic disk automorphism of finite order p with interior fixed point a:
// the rotation z -> exp(2 pi i k/p) z conjugated by the involution phi_a.
// Requires |a| < 1, p >= 2, gcd(k, p) = 1.  a = 0 yields the plain rotation.
struct EllipticSymbol {
    cplx a;
    int p = 2;
    int k = 1;
    MoebiusMap map = MoebiusMap::identity();

    // exp(2 pi i k / p), the derivative of the map at the fixed point.
    cplx multiplier() const;

    // Set when 0.95 < |a| < 1: truncation sizes and the order-3 constant L
    // degenerate near the unit circle.
    std::optional<std::string> warning;
};

EllipticSymbol elliptic_symbol(cplx a, int p, int k = 1);

// Truncation size used by default for a given fixed point: coefficient decay
// slows as |a| -> 1, so larger compressions are needed.
int default_truncation(cplx a);

}  // namespace nrc
