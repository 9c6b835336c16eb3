#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "nrc/numrange.hpp"
#include "nrc/order2.hpp"
#include "nrc/rng.hpp"

using nrc::cplx;

namespace {

Eigen::MatrixXcd random_hermitian(int n, std::uint64_t seed) {
    nrc::Rng rng(seed);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.complex_gaussian();
    return 0.5 * (m + m.adjoint());
}

}  // namespace

TEST_CASE("hermitian part basics") {
    Eigen::MatrixXcd t(2, 2);
    t << 0.0, 1.0, 0.0, 0.0;
    for (double alpha : {0.0, 0.7, 2.1}) {
        Eigen::MatrixXcd h = nrc::hermitian_part(t, alpha);
        CHECK((h - h.adjoint()).norm() < 1e-15);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        CHECK(es.eigenvalues()(1) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(es.eigenvalues()(0) == doctest::Approx(-0.5).epsilon(1e-12));
        // H(alpha + pi) = -H(alpha)
        CHECK((nrc::hermitian_part(t, alpha + std::numbers::pi) + h).norm() < 1e-14);
    }

    Eigen::MatrixXcd herm = random_hermitian(8, 5);
    CHECK((nrc::hermitian_part(herm, 0.0) - herm).norm() < 1e-14);
}

TEST_CASE("top eigenpair on small diagonal and 2x2 cases") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = -2.0;
    nrc::EigenPair top = nrc::top_eigenpair(d);
    CHECK(top.lambda == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(top.vector(0)) == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::MatrixXcd h(2, 2);
    h << 0.0, 0.5, 0.5, 0.0;
    top = nrc::top_eigenpair(h);
    CHECK(top.lambda == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(std::abs(top.vector(0)) - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("lanczos matches the dense solver on random Hermitian matrices") {
    for (int n : {150, 300}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            Eigen::MatrixXcd h = random_hermitian(n, seed);
            nrc::TopEigenOptions opt;
            opt.seed = seed;
            nrc::ExtremeEigenPairs ex = nrc::extreme_eigenpairs(h, opt);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
            CHECK(std::abs(ex.top.lambda - es.eigenvalues()(n - 1)) < 1e-10);
            CHECK(std::abs(ex.bottom.lambda - es.eigenvalues()(0)) < 1e-10);
            CHECK(ex.top.residual <= 1e-11 * h.cwiseAbs().rowwise().sum().maxCoeff());
        }
    }
}

TEST_CASE("support function of a normal matrix is the hull of its eigenvalues") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(4, 4);
    d(0, 0) = 1.0;
    d(1, 1) = cplx(0.0, 1.0);
    d(2, 2) = -1.0;
    d(3, 3) = cplx(0.0, -1.0);
    nrc::OperatorMatrix t;
    t.entries = d;
    auto samples = nrc::support_function(t, nrc::uniform_angles(8));
    // Lambda(0) = 1 attained at the eigenvalue 1.
    CHECK(samples[0].lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(samples[0].point - cplx(1.0)) < 1e-9);
    // Lambda(pi/4) = cos(pi/4) (support of the square).
    CHECK(samples[1].lambda == doctest::Approx(std::cos(std::numbers::pi / 4)).epsilon(1e-10));

    auto hull = nrc::hull_from_support(samples);
    CHECK(hull.is_convex(1e-9));
    // The square's vertices appear among the reconstructed points.
    double best = 1e300;
    for (const cplx& p : hull.points) best = std::min(best, std::abs(p - cplx(1.0)));
    CHECK(best < 1e-9);
}

TEST_CASE("nilpotent 2x2: the range is the disk of radius 1/2") {
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    nrc::OperatorMatrix t;
    t.entries = m;
    auto samples = nrc::support_function(t, nrc::uniform_angles(16));
    for (const auto& s : samples) CHECK(s.lambda == doctest::Approx(0.5).epsilon(1e-11));

    // Support samples satisfy the defining line equation.
    for (const auto& s : samples) {
        double re = std::cos(s.alpha) * s.point.real() + std::sin(s.alpha) * s.point.imag();
        CHECK(std::abs(re - s.lambda) < 1e-10);
    }

    auto hull = nrc::hull_from_support(samples);
    double r = 0.5 / std::cos(std::numbers::pi / 16.0);  // circumscribed polygon
    for (const cplx& p : hull.points) CHECK(std::abs(p) == doctest::Approx(r).epsilon(1e-9));
}

TEST_CASE("support samples satisfy the line equation for an operator compression") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 3, 1);
    nrc::OperatorMatrix t = nrc::composition_matrix(sym, 128);
    auto samples = nrc::support_function(t, nrc::uniform_angles(24));
    for (const auto& s : samples) {
        double re = std::cos(s.alpha) * s.point.real() + std::sin(s.alpha) * s.point.imag();
        CHECK(std::abs(re - s.lambda) < 1e-9);
    }
}

TEST_CASE("antipodal pairing gives the same values as the plain sweep") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    nrc::OperatorMatrix t = nrc::composition_matrix(sym, 96);
    nrc::SweepOptions with, without;
    without.exploit_antipodal = false;
    auto a = nrc::support_function(t, nrc::uniform_angles(16), with);
    auto b = nrc::support_function(t, nrc::uniform_angles(16), without);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].alpha == b[i].alpha);
        CHECK(std::abs(a[i].lambda - b[i].lambda) < 1e-9);
    }
}

TEST_CASE("compression nesting: support values increase with truncation") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 3, 1);
    auto angles = nrc::uniform_angles(24);
    auto s32 = nrc::support_function(nrc::composition_matrix(sym, 32), angles);
    auto s64 = nrc::support_function(nrc::composition_matrix(sym, 64), angles);
    auto s128 = nrc::support_function(nrc::composition_matrix(sym, 128), angles);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        CHECK(s32[i].lambda <= s64[i].lambda + 1e-9);
        CHECK(s64[i].lambda <= s128[i].lambda + 1e-9);
    }
}

TEST_CASE("support values never exceed the operator norm") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(cplx(0.3, 0.4), 3, 1);
    nrc::OperatorMatrix t = nrc::composition_matrix(sym, 64);
    double opnorm = Eigen::JacobiSVD<Eigen::MatrixXcd>(t.entries).singularValues()(0);
    auto samples = nrc::support_function(t, nrc::uniform_angles(32));
    for (const auto& s : samples) CHECK(s.lambda <= opnorm + 1e-10);
}

TEST_CASE("hull rejects unusable grids") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    nrc::OperatorMatrix t = nrc::composition_matrix(sym, 32);
    auto samples = nrc::support_function(t, nrc::uniform_angles(16));
    CHECK_THROWS(nrc::hull_from_support(std::span(samples).subspan(0, 2)));

    std::vector<nrc::SupportSample> tight = {samples[0], samples[1], samples[2]};
    tight[1].alpha = tight[0].alpha + 1e-9;  // nearly parallel consecutive lines
    CHECK_THROWS(nrc::hull_from_support(tight));
}

TEST_CASE("order-2 hull is close to the ellipse") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 2, 1);
    nrc::OperatorMatrix t = nrc::composition_matrix(sym, 256);
    auto samples = nrc::support_function(t, nrc::uniform_angles(360));
    auto hull = nrc::hull_from_support(samples);
    CHECK(hull.is_convex(1e-9));

    nrc::EllipseModel ellipse = nrc::ellipse_params(0.5);
    nrc::BoundaryPolyline closed;
    for (double alpha : nrc::uniform_angles(360))
        closed.points.push_back(nrc::ellipse_boundary_point(ellipse, alpha));
    CHECK(nrc::hausdorff(hull, closed) < 1e-3);
}

TEST_CASE("hausdorff basics") {
    nrc::BoundaryPolyline square;
    square.points = {cplx(0, 0), cplx(1, 0), cplx(1, 1), cplx(0, 1)};
    CHECK(nrc::hausdorff(square, square) == 0.0);

    nrc::BoundaryPolyline shifted = square;
    for (cplx& p : shifted.points) p += cplx(0.01, 0.0);
    CHECK(nrc::hausdorff(square, shifted) == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("symmetry defect for a rotation is zero and bad grids throw") {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.0, 3, 1);
    nrc::OperatorMatrix t = nrc::composition_matrix(sym, 24);
    auto samples = nrc::support_function(t, nrc::uniform_angles(36));
    CHECK(nrc::symmetry_defect(samples, 3) < 1e-12);
    CHECK_THROWS_AS(nrc::symmetry_defect(samples, 5), std::invalid_argument);
}

TEST_CASE("eigensolver failure names the angle") {
    // A matrix with a NaN forces the dense path to fail.
    nrc::OperatorMatrix t;
    t.entries = Eigen::MatrixXcd::Zero(4, 4);
    t.entries(0, 0) = std::numeric_limits<double>::quiet_NaN();
    try {
        nrc::support_function(t, nrc::uniform_angles(4));
        CHECK(false);
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }
}
