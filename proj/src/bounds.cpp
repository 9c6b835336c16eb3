#include "nrc/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nrc/order3.hpp"
#include "nrc/parallel.hpp"
#include "nrc/rng.hpp"

namespace nrc {


CorrelationTriple correlation_triple(const TaylorSeries& f1, const TaylorSeries& f2,
                                     const TaylorSeries& f3) {
    double n1 = f1.norm(), n2 = f2.norm(), n3 = f3.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0) || !(n3 > 0.0))
        throw std::invalid_argument("correlation_triple: zero vector");
    cplx c1 = inner_product(f2, f3) / (n2 * n3);
    cplx c2 = inner_product(f3, f1) / (n3 * n1);
    cplx c3 = inner_product(f1, f2) / (n1 * n2);
    CorrelationTriple out;
    out.delta = {std::abs(c1), std::abs(c2), std::abs(c3)};
    out.theta = {std::arg(c1), std::arg(c2), std::arg(c3)};
    return out;
}

std::array<TaylorSeries, 3> extremal_family(const std::array<double, 3>& theta, double rho,
                                            cplx a, int j_count, int n) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("extremal_family: rho must lie in (0, 1)");
    if (std::abs(a) == 0.0 || std::abs(a) >= 1.0)
        throw std::invalid_argument("extremal_family: need 0 < |a| < 1");
    if (j_count < 1) throw std::invalid_argument("extremal_family: need J >= 1");
    if (std::pow(rho, j_count) > 1e-12)
        throw std::invalid_argument("extremal_family: J too small (need rho^J <= 1e-12)");
    if (n < 3 * j_count + 8)
        throw std::invalid_argument("extremal_family: truncation too small for requested J");

    double arga = std::arg(a);
    double eta1 = -arga - theta[0];
    double eta2 = -2.0 * arga - theta[0] - theta[1];
    double eta3 = -3.0 * arga - theta[0] - theta[1] - theta[2];

    double scale = 1.0 / std::sqrt(1.0 + std::norm(a));
    double mass = 1.0 - rho;

    std::array<TaylorSeries, 3> f{TaylorSeries(n), TaylorSeries(n), TaylorSeries(n)};

    // Stream the Guyker chain e_m, accumulating the weighted combinations
    // (e_m - a e_{m-1}) / sqrt(1 + |a|^2) into the residue class of m.
    // Memory stays O(N) regardless of J.
    MoebiusMap inv = MoebiusMap::disk_involution(a);
    TaylorSeries e = kernel_series(a, n);
    TaylorSeries prev(n);
    int top = 3 * (j_count - 1) + 2 + 3;  // f1 needs u_{3j} up to j = j_count
    for (int m = 0; m <= top; ++m) {
        int r = m % 3;
        int j = m / 3;
        cplx weight = 0.0;
        if (r == 0 && j >= 1 && j <= j_count) {
            // alpha_j, j >= 1 (alpha_0 = 0 by construction)
            weight = std::polar(std::sqrt(mass * std::pow(rho, j - 1)),
                                eta2 + static_cast<double>(j - 1) * eta3);
        } else if (r == 1 && j < j_count) {
            weight = std::polar(std::sqrt(mass * std::pow(rho, j)),
                                static_cast<double>(j) * eta3);
        } else if (r == 2 && j < j_count) {
            weight = std::polar(std::sqrt(mass * std::pow(rho, j)),
                                eta1 + static_cast<double>(j) * eta3);
        }
        if (weight != cplx(0.0)) {
            TaylorSeries& target = f[static_cast<std::size_t>(r)];
            for (int i = 0; i < n; ++i)
                target.coeff(i) += weight * scale * (e.coeff(i) - a * prev.coeff(i));
        }
        prev = e;
        if (m < top) e = moebius_multiply(e, inv);
    }

    for (TaylorSeries& v : f) {
        double nrm = v.norm();
        if (!(nrm > 0.0)) throw std::runtime_error("extremal_family: degenerate vector");
        v *= cplx(1.0 / nrm);
    }
    return f;
}

QuadraticFormResiduals quadratic_form_identity(const EllipticSymbol& sym, const TaylorSeries& f1,
                                               const TaylorSeries& f2, const TaylorSeries& f3,
                                               const OperatorMatrix& t_adj) {
    if (sym.p != 3) throw std::invalid_argument("quadratic_form_identity: symbol must have order 3");
    int n = f1.size();
    if (f2.size() != n || f3.size() != n || t_adj.size() != n)
        throw std::invalid_argument("quadratic_form_identity: size mismatch");

    double n1 = f1.norm(), n2 = f2.norm(), n3 = f3.norm();
    TaylorSeries f(n);
    for (int i = 0; i < n; ++i) f.coeff(i) = f1.coeff(i) + f2.coeff(i) + f3.coeff(i);
    if (!(f.norm() > 0.0)) throw std::invalid_argument("quadratic_form_identity: f1 + f2 + f3 = 0");

    // Pairwise data (zero components are allowed here, unlike in
    // correlation_triple): t_k e^{i theta_k} is the raw inner product.
    cplx c1 = inner_product(f2, f3);
    cplx c2 = inner_product(f3, f1);
    cplx c3 = inner_product(f1, f2);
    double t1 = std::abs(c1), t2 = std::abs(c2), t3 = std::abs(c3);
    double th1 = std::arg(c1), th2 = std::arg(c2), th3 = std::arg(c3);

    cplx mu = std::conj(sym.multiplier());
    cplx mu2 = mu * mu;
    auto phase = [](double t) { return cplx(std::cos(t), std::sin(t)); };

    // <T* f, f> assembled from (norms, delta, theta) alone.  The grouping is
    // exact for either primitive-root orientation of mu.
    cplx assembled = n1 * n1 + mu * (n2 * n2) + mu2 * (n3 * n3) +
                     t3 * (phase(th3) + mu * phase(-th3)) +
                     t2 * (phase(-th2) + mu2 * phase(th2)) +
                     t1 * (mu * phase(th1) + mu2 * phase(-th1));

    Eigen::VectorXcd fv = to_vector(f);
    cplx actual = fv.dot(t_adj.entries * fv);

    QuadraticFormResiduals out;
    out.residual1 = std::abs(actual - assembled);
    double norm_expansion = n1 * n1 + n2 * n2 + n3 * n3 +
                            2.0 * (t1 * std::cos(th1) + t2 * std::cos(th2) + t3 * std::cos(th3));
    out.residual2 = std::abs(fv.squaredNorm() - norm_expansion);
    return out;
}

DisplayTriple display_correlation(const EllipticSymbol& sym, const std::array<double, 3>& norms,
                                  const std::array<double, 3>& delta,
                                  const std::array<double, 3>& theta) {
    if (sym.p != 3) throw std::invalid_argument("display_correlation: symbol must have order 3");
    DisplayTriple out;
    cplx mu = std::conj(sym.multiplier());
    if (mu.imag() >= 0.0) {
        out.norms = norms;
        out.delta = delta;
        out.theta = theta;
    } else {
        out.norms = {norms[0], norms[2], norms[1]};
        out.delta = {delta[0], delta[2], delta[1]};
        out.theta = {-theta[0], -theta[2], -theta[1]};
    }
    return out;
}

CheckReport observation_suite(cplx a, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("observation_suite: trials must be >= 1");
    double r = std::abs(a);
    if (r == 0.0 || r >= 1.0) throw std::invalid_argument("observation_suite: need 0 < |a| < 1");

    CheckReport rep;
    {
        std::ostringstream name;
        name << "observations(a=" << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i)";
        rep.suite = name.str();
    }
    rep.trials = trials;
    rep.seed = seed;

    EllipticSymbol sym = elliptic_symbol(a, 3, 1);
    const int j_max = 32;
    int n = eigenspace_truncation(a, 3, j_max);
    std::array<std::vector<TaylorSeries>, 3> bases = {
        eigenspace_basis(sym, 0, j_max, n),
        eigenspace_basis(sym, 1, j_max, n),
        eigenspace_basis(sym, 2, j_max, n),
    };
    double eps = eigenspace_tail_bound(a, 3, j_max, n);

    double big_delta = r / (1.0 + r * r);
    double bound3 = r / std::sqrt(1.0 + r * r);
    double two_d2 = 2.0 * big_delta * big_delta;

    struct Extremes {
        double d1 = 0.0, d2 = 0.0, d3 = 0.0;
        double pair23 = 0.0;  // delta2^2 + delta3^2
        bool near_corner = false;
    };
    std::vector<Extremes> partial(static_cast<std::size_t>(trials));

    parallel_for(trials, [&](int t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        std::array<TaylorSeries, 3> f{TaylorSeries(n), TaylorSeries(n), TaylorSeries(n)};
        for (int k = 0; k < 3; ++k) {
            std::vector<cplx> coeffs(static_cast<std::size_t>(j_max));
            for (cplx& c : coeffs) c = rng.complex_gaussian();
            f[static_cast<std::size_t>(k)] =
                eigenspace_sample(bases[static_cast<std::size_t>(k)], coeffs);
        }
        CorrelationTriple ct = correlation_triple(f[0], f[1], f[2]);
        Extremes& e = partial[static_cast<std::size_t>(t)];
        e.d1 = ct.delta[0];
        e.d2 = ct.delta[1];
        e.d3 = ct.delta[2];
        e.pair23 = ct.delta[1] * ct.delta[1] + ct.delta[2] * ct.delta[2];
        e.near_corner = ct.delta[0] >= big_delta - 1e-6 && ct.delta[1] >= big_delta - 1e-6 &&
                        ct.delta[2] >= big_delta - 1e-6;
    });

    Extremes worst;
    int corner_hits = 0;
    for (const Extremes& e : partial) {
        worst.d1 = std::max(worst.d1, e.d1);
        worst.d2 = std::max(worst.d2, e.d2);
        worst.d3 = std::max(worst.d3, e.d3);
        worst.pair23 = std::max(worst.pair23, e.pair23);
        if (e.near_corner) ++corner_hits;
    }

    rep.add({"delta1 <= Delta", worst.d1 <= big_delta + eps + 1e-12, worst.d1, big_delta, ""});
    rep.add({"delta2 <= Delta", worst.d2 <= big_delta + eps + 1e-12, worst.d2, big_delta, ""});
    rep.add({"delta3 <= |a|/sqrt(1+|a|^2)", worst.d3 <= bound3 + eps + 1e-12, worst.d3, bound3, ""});
    rep.add({"delta2^2 + delta3^2 < 2 Delta^2", worst.pair23 < two_d2 + eps + 1e-12, worst.pair23,
             two_d2, ""});
    rep.add({"delta1 <= 1/2", worst.d1 <= 0.5 + eps + 1e-12, worst.d1, 0.5, ""});
    rep.add({"delta2^2 + delta3^2 < 1/2", worst.pair23 < 0.5 + eps + 1e-12, worst.pair23, 0.5, ""});
    rep.add({"no sample reaches (Delta, Delta, Delta)", corner_hits == 0,
             static_cast<double>(corner_hits), 0.0, "count of samples within 1e-6 of the corner"});

    // Extremal families: correlations must match their closed forms, the
    // third coordinate staying a factor sqrt(rho) below Delta.
    double worst_closed = 0.0;
    double best_d3_gap = 1.0;
    Rng theta_rng(Rng::derive(seed, 0xe1ull));
    int extremal_cases = 0;
    for (double rho : {0.3, 0.9, 0.99}) {
        for (int variant = 0; variant < 3; ++variant) {
            std::array<double, 3> theta{};
            if (variant == 1) theta = {std::numbers::pi, std::numbers::pi, std::numbers::pi};
            if (variant == 2)
                theta = {theta_rng.uniform(0.0, 6.28), theta_rng.uniform(0.0, 6.28),
                         theta_rng.uniform(0.0, 6.28)};
            int j_count = std::max(32, static_cast<int>(std::ceil(std::log(1e-12) / std::log(rho))));
            int nn = series_budget(a, 3 * j_count + 2, 1e-12);
            auto f = extremal_family(theta, rho, a, j_count, nn);
            CorrelationTriple ct = correlation_triple(f[0], f[1], f[2]);
            cplx c1 = std::polar(ct.delta[0], ct.theta[0]);
            cplx c2 = std::polar(ct.delta[1], ct.theta[1]);
            cplx c3 = std::polar(ct.delta[2], ct.theta[2]);
            cplx want1 = -std::polar(big_delta, theta[0]);
            cplx want2 = -std::polar(big_delta, theta[1]);
            cplx want3 = -std::polar(big_delta * std::sqrt(rho), theta[2]);
            worst_closed = std::max({worst_closed, std::abs(c1 - want1), std::abs(c2 - want2),
                                     std::abs(c3 - want3)});
            best_d3_gap = std::min(best_d3_gap, big_delta - ct.delta[2]);
            ++extremal_cases;
        }
    }
    rep.add({"extremal correlations match closed forms", worst_closed <= 1e-8, worst_closed, 1e-8,
             std::to_string(extremal_cases) + " (theta, rho) cases"});
    rep.add({"extremal delta3 stays below Delta", best_d3_gap > 0.0, -best_d3_gap, 0.0,
             "min gap Delta - delta3 over extremal cases"});

    // Sampled correlations never push the coupling-matrix root past the
    // closed-form support value.
    {
        Order3Geometry geo = geometry_of(a);
        const std::array<double, 4> angles{0.0, 0.4, 1.1, 2.0};
        double worst_excess = -1.0;
        const int probes = 64;
        for (int t = 0; t < probes; ++t) {
            Rng rng(Rng::derive(seed, 0xabc000ull + static_cast<std::uint64_t>(t)));
            std::array<TaylorSeries, 3> f{TaylorSeries(n), TaylorSeries(n), TaylorSeries(n)};
            for (int k = 0; k < 3; ++k) {
                std::vector<cplx> coeffs(static_cast<std::size_t>(j_max));
                for (cplx& c : coeffs) c = rng.complex_gaussian();
                f[static_cast<std::size_t>(k)] =
                    eigenspace_sample(bases[static_cast<std::size_t>(k)], coeffs);
            }
            CorrelationTriple ct = correlation_triple(f[0], f[1], f[2]);
            DisplayTriple dt = display_correlation(sym, {1.0, 1.0, 1.0}, ct.delta, ct.theta);
            for (double alpha : angles) {
                double excess = lambda_prime(alpha, dt.delta, geo) - lambda0(alpha, geo);
                worst_excess = std::max(worst_excess, excess);
            }
        }
        rep.add({"lambda_prime(sampled delta) <= lambda0", worst_excess <= 1e-9, worst_excess, 1e-9,
                 std::to_string(probes) + " triples x 4 angles"});
    }

    return rep;
}

}  // namespace nrc
