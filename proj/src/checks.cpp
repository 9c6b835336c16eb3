#include "nrc/checks.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nrc/io.hpp"
#include "nrc/parallel.hpp"
#include "nrc/rng.hpp"

namespace nrc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string complex_label(cplx a) {
    std::ostringstream s;
    s << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i";
    return s.str();
}

std::array<TaylorSeries, 3> random_eigentriple(const std::array<std::vector<TaylorSeries>, 3>& bases,
                                               int j_max, std::uint64_t seed) {
    Rng rng(seed);
    std::array<TaylorSeries, 3> f{TaylorSeries(bases[0][0].size()), TaylorSeries(bases[0][0].size()),
                                  TaylorSeries(bases[0][0].size())};
    for (int k = 0; k < 3; ++k) {
        std::vector<cplx> coeffs(static_cast<std::size_t>(j_max));
        for (cplx& c : coeffs) c = rng.complex_gaussian();
        f[static_cast<std::size_t>(k)] = eigenspace_sample(bases[static_cast<std::size_t>(k)], coeffs);
    }
    return f;
}

}  // namespace

CheckReport identities_suite(cplx a, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("identities_suite: trials must be >= 1");
    CheckReport rep;
    rep.suite = "identities(a=" + complex_label(a) + ")";
    rep.trials = trials;
    rep.seed = seed;

    const int j_max = 32;
    double worst1 = 0.0, worst2 = 0.0, worst_repp = 0.0;

    for (int mult : {1, 2}) {
        EllipticSymbol sym = elliptic_symbol(a, 3, mult);
        int n = eigenspace_truncation(a, 3, j_max);
        OperatorMatrix t_adj = adjoint(composition_matrix(sym, n));
        std::array<std::vector<TaylorSeries>, 3> bases = {
            eigenspace_basis(sym, 0, j_max, n),
            eigenspace_basis(sym, 1, j_max, n),
            eigenspace_basis(sym, 2, j_max, n),
        };
        Order3Geometry geo = geometry_of(a);

        int share = std::max(1, trials / 2);
        std::vector<double> r1(static_cast<std::size_t>(share)), r2(static_cast<std::size_t>(share)),
            rr(static_cast<std::size_t>(share));
        parallel_for(share, [&](int t) {
            std::uint64_t s = Rng::derive(seed, static_cast<std::uint64_t>(mult * 100000 + t));
            auto f = random_eigentriple(bases, j_max, s);
            auto qf = quadratic_form_identity(sym, f[0], f[1], f[2], t_adj);
            r1[static_cast<std::size_t>(t)] = qf.residual1;
            r2[static_cast<std::size_t>(t)] = qf.residual2;

            // Coupling matrix against the operator: for f = sum x_k f_k,
            // x' M(lambda, theta') x'^T = lambda ||f||^2 - Re(e^{-i alpha} <T* f, f>).
            Rng rng(s ^ 0x77ull);
            std::array<double, 3> x{rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0),
                                    rng.uniform(0.1, 2.0)};
            double alpha = rng.uniform(0.0, 2.0 * kPi);
            double lambda = rng.uniform(0.5, 1.0 + geo.big_l);
            TaylorSeries fsum(n);
            for (int i = 0; i < n; ++i)
                fsum.coeff(i) = x[0] * f[0].coeff(i) + x[1] * f[1].coeff(i) + x[2] * f[2].coeff(i);
            CorrelationTriple ct = correlation_triple(f[0], f[1], f[2]);
            DisplayTriple dt = display_correlation(sym, x, ct.delta, ct.theta);
            Eigen::Vector3d xv(dt.norms[0], dt.norms[1], dt.norms[2]);
            Eigen::Matrix3d m = coupling_matrix(lambda, chebyshev_zeta(alpha), dt.delta, dt.theta);
            double quad = xv.dot(m * xv);
            Eigen::VectorXcd fv = to_vector(fsum);
            cplx q = fv.dot(t_adj.entries * fv);
            cplx phase(std::cos(alpha), std::sin(alpha));
            double rhs = lambda * fv.squaredNorm() - (std::conj(phase) * q).real();
            rr[static_cast<std::size_t>(t)] = std::abs(quad - rhs);
        });
        for (int t = 0; t < share; ++t) {
            worst1 = std::max(worst1, r1[static_cast<std::size_t>(t)]);
            worst2 = std::max(worst2, r2[static_cast<std::size_t>(t)]);
            worst_repp = std::max(worst_repp, rr[static_cast<std::size_t>(t)]);
        }
    }

    rep.add({"quadratic form vs adjoint (random samples)", worst1 <= 1e-7, worst1, 1e-7,
             "both multiplier orientations"});
    rep.add({"norm expansion (random samples)", worst2 <= 1e-7, worst2, 1e-7, ""});
    rep.add({"coupling matrix reproduces the quadratic form", worst_repp <= 1e-7, worst_repp, 1e-7,
             ""});

    // Extremal vectors with equal weights.
    {
        EllipticSymbol sym = elliptic_symbol(a, 3, 1);
        int n = series_budget(a, 3 * 48 + 2, 1e-12);
        OperatorMatrix t_adj = adjoint(composition_matrix(sym, n));
        auto f = extremal_family({0.0, 0.0, 0.0}, 0.5, a, 48, n);
        auto qf = quadratic_form_identity(sym, f[0], f[1], f[2], t_adj);
        double worst = std::max(qf.residual1, qf.residual2);
        rep.add({"quadratic form on extremal family", worst <= 1e-8, worst, 1e-8,
                 "theta = 0, rho = 0.5"});
    }
    return rep;
}

CheckReport order2_suite(cplx a, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("order2_suite: trials must be >= 1");
    CheckReport rep;
    rep.suite = "order2(a=" + complex_label(a) + ")";
    rep.trials = trials;
    rep.seed = seed;

    EllipticSymbol sym = elliptic_symbol(a, 2, 1);
    EllipseModel ellipse = ellipse_params(a);
    const int j_max = 32;
    int n = eigenspace_truncation(a, 2, j_max);
    Order2Workspace ws(sym, j_max, n);
    OperatorMatrix t_adj = adjoint(composition_matrix(sym, n));
    double r = std::abs(a);
    double corr_bound = 2.0 * r / (1.0 + r * r);

    // Random unit vectors across both eigenspaces.
    std::vector<double> s_vals(static_cast<std::size_t>(trials)),
        id21(static_cast<std::size_t>(trials)), corr(static_cast<std::size_t>(trials));
    parallel_for(trials, [&](int t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        std::vector<cplx> c1(static_cast<std::size_t>(j_max)), c2(static_cast<std::size_t>(j_max));
        for (cplx& c : c1) c = rng.complex_gaussian();
        for (cplx& c : c2) c = rng.complex_gaussian();
        TaylorSeries f1 = eigenspace_sample(ws.plus_basis(), c1);
        TaylorSeries f2 = eigenspace_sample(ws.minus_basis(), c2);
        double w1 = rng.uniform(0.0, 1.0);
        double w2 = std::sqrt(1.0 - w1 * w1);
        // Random phase between the halves.
        cplx ph = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
        TaylorSeries f(n);
        for (int i = 0; i < n; ++i) f.coeff(i) = w1 * f1.coeff(i) + w2 * ph * f2.coeff(i);
        double nrm = f.norm();
        f *= cplx(1.0 / nrm);
        ExclusionStat ex = exclusion_statistic(t_adj, f, ws);
        s_vals[static_cast<std::size_t>(t)] = ex.s;
        id21[static_cast<std::size_t>(t)] = ex.id21_residual;
        corr[static_cast<std::size_t>(t)] = pair_correlation(f1, f2).delta;
    });

    double worst_s = 0.0, worst_id = 0.0, worst_corr = 0.0;
    for (int t = 0; t < trials; ++t) {
        worst_s = std::max(worst_s, s_vals[static_cast<std::size_t>(t)]);
        worst_id = std::max(worst_id, id21[static_cast<std::size_t>(t)]);
        worst_corr = std::max(worst_corr, corr[static_cast<std::size_t>(t)]);
    }
    // Equality within 1e-12 of the boundary counts as a failure: sampling
    // can only ever give evidence for strict interiority.
    rep.add({"s(f) < semi-major axis", worst_s < ellipse.semi_major - 1e-12, worst_s,
             ellipse.semi_major, ""});
    rep.add({"identity (norm difference vs Re q)", worst_id <= 1e-7, worst_id, 1e-7, ""});
    rep.add({"pair correlation below 2|a|/(1+|a|^2)", worst_corr < corr_bound, worst_corr,
             corr_bound, ""});

    // Geometric-weight probe approaching the correlation supremum.
    {
        double rho = 0.99;
        int j_count = std::max(64, static_cast<int>(std::ceil(std::log(1e-10) / std::log(rho))));
        int big_n = series_budget(a, 2 * j_count + 1, 1e-12);
        std::vector<cplx> beta = near_extremal_weights(a, rho, j_count);

        // Stream u_j = (e_{2j+1} - a e_{2j})/sqrt(1+|a|^2): build f2, then its
        // projection onto the +1 eigenspace, without storing any basis.
        MoebiusMap inv = MoebiusMap::disk_involution(a);
        double scale = 1.0 / std::sqrt(1.0 + std::norm(a));
        TaylorSeries f2(big_n);
        {
            TaylorSeries e = kernel_series(a, big_n);
            TaylorSeries prev(big_n);
            for (int m = 0; m <= 2 * (j_count - 1) + 1; ++m) {
                if (m % 2 == 1) {
                    cplx w = beta[static_cast<std::size_t>(m / 2)] * scale;
                    for (int i = 0; i < big_n; ++i) f2.coeff(i) += w * (e.coeff(i) - a * prev.coeff(i));
                }
                prev = e;
                e = moebius_multiply(e, inv);
            }
            f2 *= cplx(1.0 / f2.norm());
        }
        TaylorSeries f1(big_n);
        {
            TaylorSeries e = kernel_series(a, big_n);
            TaylorSeries prev(big_n);
            for (int m = 0; m <= 2 * j_count; ++m) {
                if (m % 2 == 0) {
                    // u = (e_m - a e_{m-1}) (/ norm), project f2 onto it.
                    TaylorSeries u(big_n);
                    for (int i = 0; i < big_n; ++i) u.coeff(i) = e.coeff(i) - a * prev.coeff(i);
                    if (m > 0) u *= cplx(scale);
                    cplx c = inner_product(f2, u);
                    if (c != cplx(0.0))
                        for (int i = 0; i < big_n; ++i) f1.coeff(i) += c * u.coeff(i);
                }
                prev = e;
                e = moebius_multiply(e, inv);
            }
        }
        double delta = pair_correlation(f1, f2).delta;
        rep.add({"near-extremal pair correlation approaches the bound",
                 delta < corr_bound && corr_bound - delta <= 1e-3, corr_bound - delta, 1e-3,
                 "gap to 2|a|/(1+|a|^2) at rho = 0.99"});
    }

    // Numeric support never exceeds the ellipse, monotone in N.
    {
        std::vector<double> angles = uniform_angles(72);
        SweepOptions sweep;
        sweep.eigen.seed = seed;
        OperatorMatrix t64 = composition_matrix(sym, 64);
        OperatorMatrix t128 = composition_matrix(sym, 128);
        auto s64 = support_function(t64, angles, sweep);
        auto s128 = support_function(t128, angles, sweep);
        double worst_upper = -1.0, worst_mono = -1.0;
        for (std::size_t i = 0; i < angles.size(); ++i) {
            double closed = ellipse_support(ellipse, angles[i]);
            worst_upper = std::max(worst_upper, s128[i].lambda - closed);
            worst_upper = std::max(worst_upper, s64[i].lambda - closed);
            worst_mono = std::max(worst_mono, s64[i].lambda - s128[i].lambda);
        }
        rep.add({"numeric support below the ellipse", worst_upper <= 1e-9, worst_upper, 1e-9,
                 "N in {64, 128}, 72 angles"});
        rep.add({"support monotone in N", worst_mono <= 1e-9, worst_mono, 1e-9, ""});
    }
    return rep;
}

CheckReport order3_suite(cplx a, std::uint64_t seed) {
    CheckReport rep;
    rep.suite = "order3(a=" + complex_label(a) + ")";
    rep.seed = seed;

    Order3Geometry geo = geometry_of(a);
    SexticCurve curve = sextic_coeffs(geo.big_l);
    double curve_scale = curve.scale();
    double cubic_scale = dual_cubic_scale(geo.big_l);
    std::vector<double> angles = uniform_angles(720);
    rep.trials = static_cast<int>(angles.size());

    double worst_routes = 0.0, worst_period = 0.0, worst_line = 0.0, worst_env = 0.0;
    for (double alpha : angles) {
        double l0 = lambda0(alpha, geo);
        double lp = lambda_prime(alpha, {geo.delta, geo.delta, geo.delta}, geo);
        worst_routes = std::max(worst_routes, std::abs(l0 - lp));
        worst_period = std::max(worst_period,
                                std::abs(l0 - lambda0(alpha + 2.0 * kPi / 3.0, geo)));
        cplx lineval = dual_cubic_eval(std::cos(alpha), std::sin(alpha), -l0, geo.big_l);
        worst_line = std::max(worst_line, std::abs(lineval) / cubic_scale);
        cplx pt = envelope_point(alpha, geo);
        worst_env = std::max(worst_env,
                             std::abs(sextic_eval(pt.real(), pt.imag(), curve)) / curve_scale);
    }
    rep.add({"support cubic equals coupling-matrix route", worst_routes <= 1e-9, worst_routes,
             1e-9, "720 angles, delta = (Delta, Delta, Delta)"});
    rep.add({"support value 2pi/3-periodic", worst_period <= 1e-12, worst_period, 1e-12, ""});
    rep.add({"support lines on the tangential cubic", worst_line <= 1e-10, worst_line, 1e-10, ""});
    rep.add({"envelope points on the sextic", worst_env <= 1e-8, worst_env, 1e-8, ""});

    // Axis restriction factors as (x - 3/(4L))^3 (x^3 - L x - 1/4).
    {
        double c = 3.0 / (4.0 * geo.big_l);
        std::array<double, 7> expect{};
        // (x - c)^3 = x^3 - 3c x^2 + 3c^2 x - c^3, times (x^3 - L x - 1/4).
        std::array<double, 4> lhs{1.0, -3.0 * c, 3.0 * c * c, -c * c * c};
        std::array<double, 4> rhs{1.0, 0.0, -geo.big_l, -0.25};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) expect[static_cast<std::size_t>(i + j)] += lhs[static_cast<std::size_t>(i)] * rhs[static_cast<std::size_t>(j)];
        std::array<double, 7> axis = sextic_on_axis(curve);
        double worst = 0.0;
        for (int d = 0; d < 7; ++d) {
            double denom = std::max(std::abs(expect[static_cast<std::size_t>(d)]), 1.0);
            worst = std::max(worst,
                             std::abs(axis[static_cast<std::size_t>(d)] - expect[static_cast<std::size_t>(d)]) / denom);
        }
        rep.add({"axis restriction factorization", worst <= 1e-12, worst, 1e-12, ""});

        // Four distinct real axis crossings: the cusp abscissa plus the three
        // roots of the cubic factor.
        std::array<double, 3> roots{};
        double s = 2.0 * std::sqrt(geo.big_l / 3.0);
        double arg = std::clamp(3.0 * 0.25 / (geo.big_l * s), -1.0, 1.0);
        double t0 = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) roots[static_cast<std::size_t>(k)] = s * std::cos(t0 - 2.0 * kPi * k / 3.0);
        double min_sep = 1e300;
        for (int i = 0; i < 3; ++i) {
            min_sep = std::min(min_sep, std::abs(roots[static_cast<std::size_t>(i)] - c));
            for (int j = i + 1; j < 3; ++j)
                min_sep = std::min(min_sep,
                                   std::abs(roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)]));
        }
        double worst_root_residual = 0.0;
        for (double x : roots)
            worst_root_residual = std::max(worst_root_residual,
                                           std::abs(sextic_eval(x, 0.0, curve)) / curve_scale);
        worst_root_residual = std::max(worst_root_residual,
                                       std::abs(sextic_eval(c, 0.0, curve)) / curve_scale);
        rep.add({"four distinct real axis crossings", min_sep > 1e-9 && worst_root_residual <= 1e-10,
                 worst_root_residual, 1e-10, "min separation " + format_double(min_sep)});
    }

    {
        SingularityReport sing = singularity_report(curve);
        double worst = 0.0;
        for (const CuspCheck& cc : sing.cusps) worst = std::max(worst, cc.gradient_residual);
        rep.add({"gradient vanishes at the three cusps", sing.pass, worst, 1e-8, ""});
    }
    {
        FociReport foci = foci_check(geo.big_l);
        rep.add({"six focal lines on the tangential cubic", foci.pass, foci.worst, 1e-12, ""});
    }
    {
        double v = sextic_eval(3.0 / (8.0 * geo.big_l), 1.0 / std::sqrt(geo.big_l), curve);
        rep.add({"interior incidence point on the sextic", std::abs(v) / curve_scale <= 1e-12,
                 std::abs(v) / curve_scale, 1e-12, "(3/(8L), 1/sqrt(L))"});
    }

    // Determinant identity on random draws.
    {
        Rng rng(Rng::derive(seed, 0xdeull));
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            double alpha = rng.uniform(0.0, 2.0 * kPi);
            auto zeta = chebyshev_zeta(alpha);
            double zmax = std::max({zeta[0], zeta[1], zeta[2]});
            double lambda = rng.uniform(zmax + 0.01, zmax + 3.0);
            std::array<double, 3> delta{rng.uniform(0.0, 0.6), rng.uniform(0.0, 0.6),
                                        rng.uniform(0.0, 0.6)};
            DetPair dp = det_m_identity(lambda, zeta, delta, stationary_angles(lambda, zeta));
            double rel = std::abs(dp.numeric - dp.closed) /
                         std::max({1.0, std::abs(dp.numeric), std::abs(dp.closed)});
            worst = std::max(worst, rel);
        }
        rep.add({"determinant identity (numeric vs closed form)", worst <= 1e-10, worst, 1e-10,
                 "1000 random draws"});
    }

    // Root monotonicity in the correlations.
    {
        Rng rng(Rng::derive(seed, 0x3full));
        double worst_violation = -1e300;
        for (int t = 0; t < 1000; ++t) {
            double alpha = rng.uniform(0.0, 2.0 * kPi);
            std::array<double, 3> lo{}, hi{};
            for (int k = 0; k < 3; ++k) {
                double d1 = rng.uniform(0.01, 0.49);
                double d2 = rng.uniform(0.01, 0.49);
                lo[static_cast<std::size_t>(k)] = std::min(d1, d2);
                hi[static_cast<std::size_t>(k)] = std::max(d1, d2) + 1e-4;
            }
            double root_lo = lambda_prime(alpha, lo, geo);
            double root_hi = lambda_prime(alpha, hi, geo);
            worst_violation = std::max(worst_violation, root_lo - root_hi);
        }
        rep.add({"root strictly increasing in the correlations", worst_violation < 0.0,
                 worst_violation, 0.0, "1000 ordered pairs"});
    }

    // The tangential cubic is smooth: gradients stay bounded away from zero
    // on sampled curve points.
    {
        Rng rng(Rng::derive(seed, 0x51ull));
        double min_grad = 1e300;
        for (int t = 0; t < 1000; ++t) {
            double u = rng.uniform(-1.0, 1.0);
            double v = rng.uniform(-1.0, 1.0);
            // Solve the cubic 4 w^3 - 4L(u^2+v^2) w + (u^3 - 3 u v^2) = 0 for w.
            double p = -geo.big_l * (u * u + v * v);
            double q = 0.25 * (u * u * u - 3.0 * u * v * v);
            // Any real root will do; use the trigonometric/Cardano split.
            double w;
            double disc = q * q / 4.0 + p * p * p / 27.0;
            if (disc >= 0.0) {
                double sq = std::sqrt(disc);
                w = std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq);
            } else {
                double rr = std::sqrt(-p * p * p / 27.0);
                double phi = std::acos(std::clamp(-q / (2.0 * rr), -1.0, 1.0));
                w = 2.0 * std::sqrt(-p / 3.0) * std::cos(phi / 3.0);
            }
            double gu = 3.0 * u * u - 3.0 * v * v - 8.0 * geo.big_l * u * w;
            double gv = -6.0 * u * v - 8.0 * geo.big_l * v * w;
            double gw = -4.0 * geo.big_l * (u * u + v * v) + 12.0 * w * w;
            double norm2 = u * u + v * v + w * w;
            if (norm2 < 1e-12) continue;
            double g = std::sqrt(gu * gu + gv * gv + gw * gw) / (cubic_scale * norm2);
            min_grad = std::min(min_grad, g);
        }
        rep.add({"tangential cubic has no singular point (sampled)", min_grad > 1e-10, min_grad,
                 1e-10, "minimum scaled gradient over 1000 curve points"});
    }

    return rep;
}

std::vector<CheckReport> run_suites(const std::string& which, cplx a, int trials,
                                    std::uint64_t seed) {
    std::vector<CheckReport> out;
    bool all = which == "all";
    if (all || which == "observations") out.push_back(observation_suite(a, trials, seed));
    if (all || which == "identities") out.push_back(identities_suite(a, trials, seed));
    if (all || which == "order2") out.push_back(order2_suite(a, trials, seed));
    if (all || which == "order3") out.push_back(order3_suite(a, seed));
    if (out.empty())
        throw std::invalid_argument("run_suites: unknown suite '" + which +
                                    "' (use observations|identities|order2|order3|all)");
    return out;
}

CompareResult compare_numeric_closed(cplx a, int p, const CompareOptions& opt) {
    CompareResult res;
    res.a = a;
    res.p = p;
    res.n = opt.n;
    res.angle_count = opt.angle_count;
    res.has_closed_form = (p == 2 || p == 3) && std::abs(a) > 0.0;

    EllipticSymbol sym = elliptic_symbol(a, p, opt.multiplier_index);
    std::vector<double> angles = uniform_angles(opt.angle_count);

    SweepOptions sweep;
    sweep.eigen.seed = opt.seed;

    auto build = [&](int n) {
        return opt.basis == BasisTag::monomial ? composition_matrix(sym, n)
                                               : guyker_matrix(sym, n);
    };

    std::vector<std::vector<SupportSample>> sweeps;
    std::vector<int> sizes = opt.smaller_truncations;
    sizes.push_back(opt.n);
    for (int n : sizes) sweeps.push_back(support_function(build(n), angles, sweep));
    res.samples = sweeps.back();

    for (std::size_t level = 0; level + 1 < sweeps.size(); ++level)
        for (std::size_t i = 0; i < angles.size(); ++i)
            if (sweeps[level][i].lambda > sweeps[level + 1][i].lambda + 1e-9)
                res.monotonicity_ok = false;

    res.symmetry_defect = symmetry_defect(res.samples, p);

    if (res.has_closed_form) {
        std::vector<cplx> closed_points(angles.size());
        std::vector<double> closed_support(angles.size());
        if (p == 2) {
            EllipseModel ellipse = ellipse_params(a);
            for (std::size_t i = 0; i < angles.size(); ++i) {
                closed_support[i] = ellipse_support(ellipse, angles[i]);
                closed_points[i] = ellipse_boundary_point(ellipse, angles[i]);
            }
        } else {
            Order3Geometry geo = geometry_of(a);
            for (std::size_t i = 0; i < angles.size(); ++i) {
                closed_support[i] = lambda0(angles[i], geo);
                closed_points[i] = envelope_point(angles[i], geo);
            }
        }

        res.sup_support_gap = -1e300;
        res.min_support_gap = 1e300;
        for (std::size_t i = 0; i < angles.size(); ++i) {
            double gap = closed_support[i] - res.samples[i].lambda;
            res.sup_support_gap = std::max(res.sup_support_gap, gap);
            res.min_support_gap = std::min(res.min_support_gap, gap);
        }
        for (const auto& sw : sweeps)
            for (std::size_t i = 0; i < angles.size(); ++i)
                if (closed_support[i] - sw[i].lambda < -1e-9) res.upper_bound_ok = false;

        BoundaryPolyline numeric = hull_from_support(res.samples);
        BoundaryPolyline closed;
        closed.closed = true;
        closed.points = closed_points;
        res.hausdorff_distance = hausdorff(numeric, closed);
    }
    return res;
}

}  // namespace nrc
