#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nrc/order2.hpp"
#include "nrc/rng.hpp"

using nrc::cplx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ellipse parameters") {
    nrc::EllipseModel e = nrc::ellipse_params(0.5);
    CHECK(e.semi_major == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(e.semi_minor == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

    nrc::EllipseModel e8 = nrc::ellipse_params(cplx(0.0, 0.8));
    CHECK(e8.semi_major == doctest::Approx(41.0 / 9.0).epsilon(1e-14));
    CHECK(e8.semi_minor == doctest::Approx(40.0 / 9.0).epsilon(1e-14));

    // Foci at +-1 for every fixed point.
    nrc::Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        double r = 0.02 + 0.95 * rng.uniform();
        nrc::EllipseModel m = nrc::ellipse_params(std::polar(r, rng.uniform(0.0, 2 * kPi)));
        CHECK(m.semi_major * m.semi_major - m.semi_minor * m.semi_minor ==
              doctest::Approx(1.0).epsilon(1e-11));
    }

    // Degenerate limit: the segment [-1, 1].
    nrc::EllipseModel small = nrc::ellipse_params(1e-9);
    CHECK(small.semi_major == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(small.semi_minor < 1e-8);

    CHECK_THROWS_AS(nrc::ellipse_params(0.0), std::invalid_argument);
    CHECK_THROWS_AS(nrc::ellipse_params(cplx(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("ellipse support function") {
    nrc::EllipseModel e = nrc::ellipse_params(0.5);
    CHECK(nrc::ellipse_support(e, 0.0) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(nrc::ellipse_support(e, kPi / 2.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(nrc::ellipse_support(e, kPi / 4.0) ==
          doctest::Approx(std::sqrt(41.0 / 18.0)).epsilon(1e-15));

    // The boundary point lies on the support line and on the ellipse.
    for (double alpha : {0.0, 0.3, 1.2, 2.9, 4.4}) {
        double lam = nrc::ellipse_support(e, alpha);
        cplx p = nrc::ellipse_boundary_point(e, alpha);
        CHECK(std::abs(std::cos(alpha) * p.real() + std::sin(alpha) * p.imag() - lam) < 1e-14);
        double on = p.real() * p.real() / (e.semi_major * e.semi_major) +
                    p.imag() * p.imag() / (e.semi_minor * e.semi_minor);
        CHECK(on == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("pair correlation: explicit one-term case") {
    // f1 = e_0, f2 = (e_1 - a e_0)/sqrt(1 + |a|^2) at a = 1/2 has
    // correlation |a| / sqrt(1 + |a|^2).
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    auto plus = nrc::eigenspace_basis(sym, 0, 1, 64);
    auto minus = nrc::eigenspace_basis(sym, 1, 1, 64);
    nrc::PairCorrelation pc = nrc::pair_correlation(plus[0], minus[0]);
    CHECK(pc.delta == doctest::Approx(0.5 / std::sqrt(1.25)).epsilon(1e-12));

    // Far-apart Guyker supports are orthogonal up to truncation.
    auto plus_far = nrc::eigenspace_basis(sym, 0, 8, 256);
    nrc::PairCorrelation far = nrc::pair_correlation(plus_far[7], minus[0]);
    CHECK(far.delta < 1e-10);

    nrc::TaylorSeries zero(64);
    CHECK_THROWS_AS(nrc::pair_correlation(zero, minus[0]), std::invalid_argument);
}

TEST_CASE("pair correlation stays below the bound and the probe approaches it") {
    cplx a(0.34, 0.41);
    double r = std::abs(a);
    double bound = 2.0 * r / (1.0 + r * r);
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(a, 2, 1);
    int n = nrc::eigenspace_truncation(a, 2, 16);
    auto plus = nrc::eigenspace_basis(sym, 0, 16, n);
    auto minus = nrc::eigenspace_basis(sym, 1, 16, n);

    nrc::Rng rng(11);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        std::vector<cplx> c1(16), c2(16);
        for (cplx& c : c1) c = rng.complex_gaussian();
        for (cplx& c : c2) c = rng.complex_gaussian();
        nrc::PairCorrelation pc = nrc::pair_correlation(nrc::eigenspace_sample(plus, c1),
                                                        nrc::eigenspace_sample(minus, c2));
        worst = std::max(worst, pc.delta);
        CHECK(pc.delta < bound);
    }
    CHECK(worst > 0.2 * bound);  // the sampler explores a fair share of the range
}

TEST_CASE("near-extremal weights have unit mass and geometric profile") {
    auto w = nrc::near_extremal_weights(cplx(0.3, 0.2), 0.9, 200);
    double mass = 0.0;
    for (const cplx& c : w) mass += std::norm(c);
    CHECK(mass == doctest::Approx(1.0 - std::pow(0.9, 200)).epsilon(1e-12));
    CHECK(std::abs(w[1]) / std::abs(w[0]) == doctest::Approx(std::sqrt(0.9)).epsilon(1e-12));
    CHECK_THROWS_AS(nrc::near_extremal_weights(0.5, 1.0, 4), std::invalid_argument);
}

TEST_CASE("exclusion statistic: eigenvectors give q = +-1 and zero identity residual") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    int n = nrc::eigenspace_truncation(0.5, 2, 8);
    nrc::Order2Workspace ws(sym, 8, n);
    nrc::OperatorMatrix t_adj = nrc::adjoint(nrc::composition_matrix(sym, n));

    // f = k_a: adjoint eigenvector with eigenvalue 1.
    nrc::TaylorSeries ka = nrc::kernel_series(0.5, n);
    nrc::ExclusionStat plus = nrc::exclusion_statistic(t_adj, ka, ws);
    CHECK(std::abs(plus.q - cplx(1.0)) < 1e-10);
    CHECK(plus.s == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(plus.id21_residual < 1e-10);

    // f in the (-1)-eigenspace.
    auto minus = nrc::eigenspace_basis(sym, 1, 4, n);
    nrc::ExclusionStat neg = nrc::exclusion_statistic(t_adj, minus[2], ws);
    CHECK(std::abs(neg.q - cplx(-1.0)) < 1e-10);
    CHECK(neg.s == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(neg.id21_residual < 1e-10);

    // Non-unit vectors are rejected.
    nrc::TaylorSeries big = ka;
    big *= cplx(2.0);
    CHECK_THROWS_AS(nrc::exclusion_statistic(t_adj, big, ws), std::invalid_argument);
}

TEST_CASE("exclusion statistics stay strictly inside the ellipse") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    nrc::EllipseModel ellipse = nrc::ellipse_params(0.5);
    int n = nrc::eigenspace_truncation(0.5, 2, 16);
    nrc::Order2Workspace ws(sym, 16, n);
    nrc::OperatorMatrix t_adj = nrc::adjoint(nrc::composition_matrix(sym, n));

    nrc::Rng rng(13);
    for (int t = 0; t < 500; ++t) {
        std::vector<cplx> c1(16), c2(16);
        for (cplx& c : c1) c = rng.complex_gaussian();
        for (cplx& c : c2) c = rng.complex_gaussian();
        nrc::TaylorSeries f1 = nrc::eigenspace_sample(ws.plus_basis(), c1);
        nrc::TaylorSeries f2 = nrc::eigenspace_sample(ws.minus_basis(), c2);
        double w1 = rng.uniform();
        double w2 = std::sqrt(1.0 - w1 * w1);
        nrc::TaylorSeries f(n);
        for (int i = 0; i < n; ++i) f.coeff(i) = w1 * f1.coeff(i) + w2 * f2.coeff(i);
        f *= cplx(1.0 / f.norm());
        nrc::ExclusionStat ex = nrc::exclusion_statistic(t_adj, f, ws);
        CHECK(ex.s < ellipse.semi_major - 1e-12);
        CHECK(ex.id21_residual <= 1e-7);
        CHECK(ex.projection_residual <= 1e-8);
        // q itself lies inside the ellipse: s is its elliptic coordinate.
        CHECK(0.5 * (std::abs(cplx(1.0) - ex.q) + std::abs(cplx(1.0) + ex.q)) ==
              doctest::Approx(ex.s).epsilon(1e-15));
    }
}

TEST_CASE("workspace split recovers the eigenspace components") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    int n = nrc::eigenspace_truncation(0.5, 2, 8);
    nrc::Order2Workspace ws(sym, 8, n);
    nrc::Rng rng(17);
    std::vector<cplx> c1(8), c2(8);
    for (cplx& c : c1) c = rng.complex_gaussian();
    for (cplx& c : c2) c = rng.complex_gaussian();
    nrc::TaylorSeries f1 = nrc::eigenspace_sample(ws.plus_basis(), c1);
    nrc::TaylorSeries f2 = nrc::eigenspace_sample(ws.minus_basis(), c2);
    nrc::TaylorSeries f(n);
    for (int i = 0; i < n; ++i) f.coeff(i) = 0.6 * f1.coeff(i) + 0.8 * f2.coeff(i);
    auto split = ws.split(f);
    CHECK(std::sqrt(split.norm1_sq) == doctest::Approx(0.6).epsilon(1e-10));
    CHECK(std::sqrt(split.norm2_sq) == doctest::Approx(0.8).epsilon(1e-10));
    CHECK(split.residual < 1e-10);
}
