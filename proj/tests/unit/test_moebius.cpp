#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "nrc/moebius.hpp"
#include "nrc/rng.hpp"

using nrc::cplx;
using nrc::MoebiusMap;

namespace {
bool proportional(const Eigen::Matrix2cd& m, const Eigen::Matrix2cd& target, double tol) {
    // Both normalized; compare up to a unimodular scalar.
    cplx scale = 0.0;
    double best = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (std::abs(target(i, j)) > best) {
                best = std::abs(target(i, j));
                scale = m(i, j) / target(i, j);
            }
    return (m - scale * target).norm() < tol;
}
}  // namespace

TEST_CASE("composition with the identity is a no-op") {
    MoebiusMap g = MoebiusMap::disk_involution(cplx(0.3, 0.2));
    MoebiusMap composed = nrc::compose(MoebiusMap::identity(), g);
    CHECK(proportional(composed.matrix(), g.matrix(), 1e-14));
}

TEST_CASE("disk involution composed with itself is the identity") {
    MoebiusMap f = MoebiusMap::disk_involution(0.5);
    MoebiusMap ff = nrc::compose(f, f);
    CHECK(ff.identity_residual() < 1e-14);

    nrc::Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        double r = 0.95 * std::sqrt(rng.uniform());
        double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
        MoebiusMap g = MoebiusMap::disk_involution(std::polar(r, ang));
        CHECK(nrc::compose(g, g).identity_residual() < 1e-12);
    }
}

TEST_CASE("conjugated rotation matches the hand-multiplied matrix") {
    // phi_{1/2} o (z -> -z) o phi_{1/2} has matrix proportional to
    // ((-1.25, 1), (-1, 1.25)), i.e. the map (0.8 - z)/(1 - 0.8 z).
    MoebiusMap inv = MoebiusMap::disk_involution(0.5);
    MoebiusMap neg = MoebiusMap::rotation(-1.0);
    MoebiusMap m = nrc::compose(inv, nrc::compose(neg, inv));
    Eigen::Matrix2cd expect;
    expect << -1.25, 1.0, -1.0, 1.25;
    expect /= expect.norm();
    CHECK(proportional(m.matrix(), expect, 1e-14));
    CHECK(std::abs(m(cplx(0.0)) - cplx(0.8)) < 1e-15);
}

TEST_CASE("degenerate matrices are rejected") {
    Eigen::Matrix2cd bad;
    bad << 1.0, 2.0, 2.0, 4.0;
    CHECK_THROWS_AS(MoebiusMap::from_matrix(bad), std::invalid_argument);
}

TEST_CASE("elliptic symbol: rotation case") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.0, 3, 1);
    cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK(std::abs(sym.map(cplx(0.25, 0.1)) - w * cplx(0.25, 0.1)) < 1e-15);
    CHECK(std::abs(sym.multiplier() - w) < 1e-15);
}

TEST_CASE("elliptic symbol: order 2 at a = 1/2 is (0.8 - z)/(1 - 0.8 z)") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    CHECK(std::abs(sym.map(cplx(0.5)) - cplx(0.5)) < 1e-14);
    CHECK(std::abs(sym.map(cplx(0.0)) - cplx(0.8)) < 1e-14);
    CHECK(std::abs(sym.map.derivative(0.5) - cplx(-1.0)) < 1e-12);
}

TEST_CASE("elliptic symbol invariants across orders and fixed points") {
    nrc::Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        int p = 2 + static_cast<int>(rng.next_u64() % 5);
        int k = 1;
        while (std::gcd(k, p) != 1 || k < 1) k = 1 + static_cast<int>(rng.next_u64() % p);
        double r = 0.95 * std::sqrt(rng.uniform());
        cplx a = std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi));
        nrc::EllipticSymbol sym = nrc::elliptic_symbol(a, p, k);

        CHECK(std::abs(sym.map(a) - a) < 1e-12);
        CHECK(std::abs(sym.map.derivative(a) - sym.multiplier()) < 1e-12);
        CHECK(nrc::moebius_power(sym.map, p).identity_residual() < 1e-12);
    }
}

TEST_CASE("elliptic symbol rejects bad parameters") {
    CHECK_THROWS_AS(nrc::elliptic_symbol(cplx(1.2, 0.0), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(nrc::elliptic_symbol(0.5, 4, 2), std::invalid_argument);  // gcd != 1
    CHECK_THROWS_AS(nrc::elliptic_symbol(0.5, 1, 1), std::invalid_argument);
    CHECK_FALSE(nrc::elliptic_symbol(0.5, 2, 1).warning.has_value());
    CHECK(nrc::elliptic_symbol(0.97, 2, 1).warning.has_value());
}

TEST_CASE("three-fold composition of an order-3 symbol is the identity") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 3, 1);
    MoebiusMap m3 = nrc::moebius_power(sym.map, 3);
    CHECK(m3.identity_residual() < 1e-14);
    cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK(std::abs(sym.map.derivative(0.5) - w) < 1e-13);
}

TEST_CASE("default truncation grows toward the unit circle") {
    CHECK(nrc::default_truncation(0.5) == 256);
    CHECK(nrc::default_truncation(0.7) == 512);
    CHECK(nrc::default_truncation(cplx(0.0, 0.9)) == 1024);
}
