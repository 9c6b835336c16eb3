#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nrc/bounds.hpp"
#include "nrc/checks.hpp"
#include "nrc/order3.hpp"
#include "nrc/rng.hpp"

using nrc::cplx;

namespace {
constexpr double kPi = std::numbers::pi;

std::array<std::vector<nrc::TaylorSeries>, 3> bases_for(const nrc::EllipticSymbol& sym, int j_max,
                                                        int n) {
    return {nrc::eigenspace_basis(sym, 0, j_max, n), nrc::eigenspace_basis(sym, 1, j_max, n),
            nrc::eigenspace_basis(sym, 2, j_max, n)};
}
}  // namespace

TEST_CASE("correlation triple: one-term specialization") {
    // f1 = (e_3 - a e_2)/c, f2 = (e_1 - a e_0)/c, f3 = (e_2 - a e_1)/c at
    // a = 1/2: each pairwise correlation reduces to a single term of size
    // Delta = |a|/(1 + |a|^2) (delta3 couples adjacent indices too).
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 3, 1);
    int n = nrc::eigenspace_truncation(0.5, 3, 4);
    auto b = bases_for(sym, 4, n);
    // Second vector of the r=0 family is (e_3 - a e_2)/c.
    nrc::CorrelationTriple ct = nrc::correlation_triple(b[0][1], b[1][0], b[2][0]);
    double delta = 0.4;
    CHECK(ct.delta[0] == doctest::Approx(delta).epsilon(1e-10));  // <f2, f3> term
    CHECK(ct.delta[1] == doctest::Approx(delta).epsilon(1e-10));  // <f3, f1> term
    CHECK(ct.delta[2] == doctest::Approx(delta).epsilon(1e-10));  // <f1, f2> term
}

TEST_CASE("correlation bounds hold on random samples for several fixed points") {
    for (cplx a : {cplx(0.5, 0.0), cplx(0.0, 0.62), cplx(-0.3, 0.35)}) {
        double r = std::abs(a);
        double big_delta = r / (1.0 + r * r);
        double bound3 = r / std::sqrt(1.0 + r * r);
        nrc::EllipticSymbol sym = nrc::elliptic_symbol(a, 3, 1);
        const int j_max = 12;
        int n = nrc::eigenspace_truncation(a, 3, j_max);
        auto b = bases_for(sym, j_max, n);
        double eps = nrc::eigenspace_tail_bound(a, 3, j_max, n);
        nrc::Rng rng(29);
        for (int t = 0; t < 300; ++t) {
            std::array<nrc::TaylorSeries, 3> f{nrc::TaylorSeries(n), nrc::TaylorSeries(n),
                                               nrc::TaylorSeries(n)};
            for (int k = 0; k < 3; ++k) {
                std::vector<cplx> coeffs(j_max);
                for (cplx& c : coeffs) c = rng.complex_gaussian();
                f[static_cast<std::size_t>(k)] =
                    nrc::eigenspace_sample(b[static_cast<std::size_t>(k)], coeffs);
            }
            nrc::CorrelationTriple ct = nrc::correlation_triple(f[0], f[1], f[2]);
            CHECK(ct.delta[0] <= big_delta + eps + 1e-12);
            CHECK(ct.delta[1] <= big_delta + eps + 1e-12);
            CHECK(ct.delta[2] <= bound3 + eps + 1e-12);
            CHECK(ct.delta[1] * ct.delta[1] + ct.delta[2] * ct.delta[2] <
                  2.0 * big_delta * big_delta + eps + 1e-12);
            CHECK(ct.delta[0] <= 0.5 + eps + 1e-12);
        }
    }
}

TEST_CASE("extremal family reproduces its closed-form correlations") {
    // theta = 0: correlations (-Delta, -Delta, -Delta sqrt(rho)).
    cplx a = 0.5;
    double big_delta = 0.4;
    double rho = 0.5;
    int j_count = 48;
    int n = nrc::series_budget(a, 3 * j_count + 2, 1e-12);
    auto f = nrc::extremal_family({0.0, 0.0, 0.0}, rho, a, j_count, n);
    nrc::CorrelationTriple ct = nrc::correlation_triple(f[0], f[1], f[2]);

    CHECK(std::polar(ct.delta[0], ct.theta[0]).real() == doctest::Approx(-big_delta).epsilon(1e-9));
    CHECK(std::polar(ct.delta[1], ct.theta[1]).real() == doctest::Approx(-big_delta).epsilon(1e-9));
    CHECK(std::polar(ct.delta[2], ct.theta[2]).real() ==
          doctest::Approx(-big_delta * std::sqrt(rho)).epsilon(1e-9));

    // theta = (pi, pi, pi) flips all signs.
    auto g = nrc::extremal_family({kPi, kPi, kPi}, rho, a, j_count, n);
    nrc::CorrelationTriple cg = nrc::correlation_triple(g[0], g[1], g[2]);
    CHECK(std::polar(cg.delta[0], cg.theta[0]).real() == doctest::Approx(big_delta).epsilon(1e-9));
    CHECK(std::polar(cg.delta[1], cg.theta[1]).real() == doctest::Approx(big_delta).epsilon(1e-9));
    CHECK(std::polar(cg.delta[2], cg.theta[2]).real() ==
          doctest::Approx(big_delta * std::sqrt(rho)).epsilon(1e-9));

    // Complex fixed point, generic phases.
    cplx ai(0.21, 0.45);
    double di = std::abs(ai) / (1.0 + std::norm(ai));
    auto h = nrc::extremal_family({0.4, -1.1, 2.0}, rho, ai, j_count,
                                  nrc::series_budget(ai, 3 * j_count + 2, 1e-12));
    nrc::CorrelationTriple ch = nrc::correlation_triple(h[0], h[1], h[2]);
    CHECK(std::abs(std::polar(ch.delta[0], ch.theta[0]) - (-std::polar(di, 0.4))) < 1e-9);
    CHECK(std::abs(std::polar(ch.delta[1], ch.theta[1]) - (-std::polar(di, -1.1))) < 1e-9);
    CHECK(std::abs(std::polar(ch.delta[2], ch.theta[2]) - (-std::polar(di * std::sqrt(rho), 2.0))) <
          1e-9);

    CHECK_THROWS_AS(nrc::extremal_family({0, 0, 0}, 1.2, a, 48, n), std::invalid_argument);
    CHECK_THROWS_AS(nrc::extremal_family({0, 0, 0}, 0.9, a, 4, n), std::invalid_argument);
}

TEST_CASE("quadratic form identity holds for both multiplier orientations") {
    for (int mult : {1, 2}) {
        nrc::EllipticSymbol sym = nrc::elliptic_symbol(0.5, 3, mult);
        const int j_max = 10;
        int n = nrc::eigenspace_truncation(0.5, 3, j_max);
        auto b = bases_for(sym, j_max, n);
        nrc::OperatorMatrix t_adj = nrc::adjoint(nrc::composition_matrix(sym, n));

        nrc::Rng rng(53);
        for (int t = 0; t < 50; ++t) {
            std::array<nrc::TaylorSeries, 3> f{nrc::TaylorSeries(n), nrc::TaylorSeries(n),
                                               nrc::TaylorSeries(n)};
            for (int k = 0; k < 3; ++k) {
                std::vector<cplx> coeffs(j_max);
                for (cplx& c : coeffs) c = rng.complex_gaussian();
                f[static_cast<std::size_t>(k)] =
                    nrc::eigenspace_sample(b[static_cast<std::size_t>(k)], coeffs);
            }
            auto qf = nrc::quadratic_form_identity(sym, f[0], f[1], f[2], t_adj);
            CHECK(qf.residual1 <= 1e-10);
            CHECK(qf.residual2 <= 1e-10);
        }

        // Single-component f: <T* f, f> = mu^{k-1} ||f_k||^2.
        auto qf1 = nrc::quadratic_form_identity(sym, b[0][0], nrc::TaylorSeries(n),
                                                nrc::TaylorSeries(n), t_adj);
        CHECK(qf1.residual1 <= 1e-12);
        CHECK(qf1.residual2 <= 1e-12);
    }
}

TEST_CASE("display relabeling pairs the data with the fixed zeta order") {
    // Verified through the quadratic-form identity in identities_suite; here
    // just pin the combinatorics.
    nrc::EllipticSymbol k1 = nrc::elliptic_symbol(0.5, 3, 1);
    nrc::EllipticSymbol k2 = nrc::elliptic_symbol(0.5, 3, 2);
    std::array<double, 3> norms{1.0, 2.0, 3.0}, delta{0.1, 0.2, 0.3}, theta{0.4, 0.5, 0.6};
    nrc::DisplayTriple d1 = nrc::display_correlation(k1, norms, delta, theta);
    CHECK(d1.norms[1] == 3.0);  // slots 2 and 3 swapped
    CHECK(d1.delta[1] == 0.3);
    CHECK(d1.theta[1] == -0.6);
    nrc::DisplayTriple d2 = nrc::display_correlation(k2, norms, delta, theta);
    CHECK(d2.norms[1] == 2.0);  // orientation already matches
    CHECK(d2.theta[2] == 0.6);
}

TEST_CASE("observation suite passes at moderate scale") {
    nrc::CheckReport rep = nrc::observation_suite(0.5, 400, 99);
    CHECK(rep.pass);
    CHECK(rep.records.size() >= 9);

    nrc::CheckReport rep9 = nrc::observation_suite(cplx(0.0, 0.9), 150, 7);
    CHECK(rep9.pass);
}

TEST_CASE("identities suite passes at moderate scale") {
    nrc::CheckReport rep = nrc::identities_suite(0.5, 60, 5);
    CHECK(rep.pass);
}

TEST_CASE("order2 suite passes at moderate scale") {
    nrc::CheckReport rep = nrc::order2_suite(0.5, 300, 21);
    CHECK(rep.pass);
}

TEST_CASE("order3 suite passes for the reference fixed point") {
    nrc::CheckReport rep = nrc::order3_suite(0.5, 12);
    CHECK(rep.pass);
    CHECK(!rep.records.empty());
}

TEST_CASE("suite selector") {
    auto reports = nrc::run_suites("order3", 0.5, 10, 1);
    CHECK(reports.size() == 1);
    CHECK_THROWS_AS(nrc::run_suites("nope", 0.5, 10, 1), std::invalid_argument);
}
