#include "nrc/numrange.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nrc/parallel.hpp"
#include "nrc/rng.hpp"

namespace nrc {

namespace {

constexpr double kPi = std::numbers::pi;

double gershgorin_bound(const Eigen::MatrixXcd& h) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        double row = 0.0;
        for (Eigen::Index j = 0; j < h.cols(); ++j) row += std::abs(h(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

Eigen::VectorXcd seeded_unit_vector(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed ^ 0x5bd1e995u);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
    v.normalize();
    return v;
}

EigenPair assemble_ritz(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& basis,
                        Eigen::Index m, double theta, const Eigen::VectorXd& coeffs) {
    Eigen::VectorXcd y = basis.leftCols(m) * coeffs.cast<cplx>();
    y.normalize();
    EigenPair out;
    out.lambda = theta;
    out.vector = y;
    out.residual = (h * y - theta * y).norm();
    return out;
}

ExtremeEigenPairs dense_extremes(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("top_eigenpair: dense Hermitian eigensolver failed");
    Eigen::Index n = h.rows();
    ExtremeEigenPairs out;
    out.top.lambda = es.eigenvalues()(n - 1);
    out.top.vector = es.eigenvectors().col(n - 1);
    out.top.residual = (h * out.top.vector - out.top.lambda * out.top.vector).norm();
    out.bottom.lambda = es.eigenvalues()(0);
    out.bottom.vector = es.eigenvectors().col(0);
    out.bottom.residual = (h * out.bottom.vector - out.bottom.lambda * out.bottom.vector).norm();
    return out;
}

// Lanczos with full reorthogonalization.  The Krylov space may grow to the
// full dimension (full reorthogonalization keeps the basis orthonormal, so
// the final tridiagonal problem is then exact); exact breakdowns are handled
// by restarting the recurrence with a fresh deterministic direction, which
// leaves the tridiagonal matrix block-decoupled but still valid.
ExtremeEigenPairs lanczos_extremes(const Eigen::MatrixXcd& h, const TopEigenOptions& opt,
                                   bool want_bottom) {
    const Eigen::Index n = h.rows();
    const double scale = std::max(gershgorin_bound(h), 1e-300);
    const double target = opt.tol * scale;
    const double breakdown = 1e-14 * scale;

    Eigen::MatrixXcd basis(n, std::min<Eigen::Index>(n, 64));
    basis.col(0) = seeded_unit_vector(n, opt.seed);
    std::vector<double> diag, sub;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    double prev_top = std::numeric_limits<double>::infinity();
    double prev_bottom = prev_top;
    double best_res = prev_top;
    int restarts = 0;

    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index m = k + 1;
        Eigen::VectorXcd w = h * basis.col(k);
        double alpha = basis.col(k).dot(w).real();
        diag.push_back(alpha);
        // Two classical Gram-Schmidt passes against the whole basis; this
        // subsumes the three-term recurrence and keeps the basis orthonormal
        // to machine precision.
        for (int pass = 0; pass < 2; ++pass)
            w.noalias() -= basis.leftCols(m) * (basis.leftCols(m).adjoint() * w);
        double beta = w.norm();

        const bool last = (k == n - 1);
        if (last || (m % 8 == 0) || beta <= breakdown) {
            Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), m);
            Eigen::VectorXd e = m > 1 ? Eigen::Map<const Eigen::VectorXd>(sub.data(), m - 1)
                                      : Eigen::VectorXd();
            tri.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
            if (tri.info() != Eigen::Success) {
                if (last) throw std::runtime_error("top_eigenpair: tridiagonal eigensolver failed");
                continue;
            }
            double theta_top = tri.eigenvalues()(m - 1);
            double theta_bottom = tri.eigenvalues()(0);
            bool settled = std::abs(theta_top - prev_top) <= 0.05 * target &&
                           (!want_bottom || std::abs(theta_bottom - prev_bottom) <= 0.05 * target);
            prev_top = theta_top;
            prev_bottom = theta_bottom;

            if (settled || last || beta <= breakdown) {
                tri.computeFromTridiagonal(d, e);
                if (tri.info() != Eigen::Success) {
                    if (last) throw std::runtime_error("top_eigenpair: tridiagonal eigensolver failed");
                    continue;
                }
                double est_top = beta * std::abs(tri.eigenvectors()(m - 1, m - 1));
                double est_bottom = beta * std::abs(tri.eigenvectors()(m - 1, 0));
                bool promising = est_top <= target && (!want_bottom || est_bottom <= target);
                if (promising || last) {
                    ExtremeEigenPairs out;
                    out.top = assemble_ritz(h, basis, m, tri.eigenvalues()(m - 1),
                                            tri.eigenvectors().col(m - 1));
                    if (want_bottom)
                        out.bottom = assemble_ritz(h, basis, m, tri.eigenvalues()(0),
                                                   tri.eigenvectors().col(0));
                    double worst = std::max(out.top.residual,
                                            want_bottom ? out.bottom.residual : 0.0);
                    best_res = std::min(best_res, worst);
                    if (worst <= target) return out;
                    if (last) {
                        std::ostringstream msg;
                        msg << "top_eigenpair: Lanczos did not reach tolerance " << opt.tol
                            << " (best residual " << best_res / scale << " relative)";
                        throw std::runtime_error(msg.str());
                    }
                }
            }
        }

        if (k + 1 < n) {
            if (basis.cols() < m + 1)
                basis.conservativeResize(Eigen::NoChange, std::min(n, basis.cols() + 64));
            if (beta <= breakdown) {
                // Exact invariant subspace: restart with a fresh direction.
                sub.push_back(0.0);
                Eigen::VectorXcd f = seeded_unit_vector(
                    n, Rng::derive(opt.seed, 1000 + static_cast<std::uint64_t>(++restarts)));
                for (int pass = 0; pass < 2; ++pass)
                    f.noalias() -= basis.leftCols(m) * (basis.leftCols(m).adjoint() * f);
                double fn = f.norm();
                if (fn <= 1e-14)
                    throw std::runtime_error("top_eigenpair: basis degenerated before convergence");
                basis.col(m) = f / fn;
            } else {
                sub.push_back(beta);
                basis.col(m) = w / beta;
            }
        }
    }
    throw std::runtime_error("top_eigenpair: Lanczos exhausted the space without convergence");
}

ExtremeEigenPairs compute_extremes(const Eigen::MatrixXcd& h, const TopEigenOptions& opt,
                                   bool want_bottom) {
    if (h.rows() != h.cols()) throw std::invalid_argument("top_eigenpair: matrix must be square");
    if (h.rows() == 0) throw std::invalid_argument("top_eigenpair: empty matrix");
    if (h.rows() <= opt.dense_threshold) return dense_extremes(h);
    return lanczos_extremes(h, opt, want_bottom);
}

}  // namespace

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& t, double alpha) {
    cplx phase(std::cos(alpha), -std::sin(alpha));
    Eigen::MatrixXcd m = phase * t;
    return 0.5 * (m + m.adjoint());
}

EigenPair top_eigenpair(const Eigen::MatrixXcd& h, const TopEigenOptions& opt) {
    return compute_extremes(h, opt, false).top;
}

ExtremeEigenPairs extreme_eigenpairs(const Eigen::MatrixXcd& h, const TopEigenOptions& opt) {
    return compute_extremes(h, opt, true);
}

std::vector<double> uniform_angles(int count) {
    if (count < 1) throw std::invalid_argument("uniform_angles: count must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
    return out;
}

std::vector<SupportSample> support_function(const OperatorMatrix& t,
                                            std::span<const double> angles,
                                            const SweepOptions& opt) {
    if (angles.empty()) throw std::invalid_argument("support_function: no angles given");
    const Eigen::MatrixXcd& m = t.entries;
    const Eigen::MatrixXcd a_part = 0.5 * (m + m.adjoint());
    const Eigen::MatrixXcd b_part = cplx(0.0, -0.5) * (m - m.adjoint());

    const int count = static_cast<int>(angles.size());
    bool antipodal = opt.exploit_antipodal && count % 2 == 0;
    if (antipodal) {
        int half = count / 2;
        for (int i = 0; i < half && antipodal; ++i)
            antipodal = std::abs(angles[static_cast<std::size_t>(i + half)] -
                                 angles[static_cast<std::size_t>(i)] - kPi) <= 1e-12;
    }

    std::vector<SupportSample> out(static_cast<std::size_t>(count));
    std::vector<std::string> errors(static_cast<std::size_t>(count));

    auto boundary_point = [&m](const Eigen::VectorXcd& v) { return v.dot(m * v); };

    auto solve_angle = [&](int slot, double alpha, bool both) {
        TopEigenOptions eo = opt.eigen;
        eo.seed = Rng::derive(opt.eigen.seed, static_cast<std::uint64_t>(slot));
        Eigen::MatrixXcd h = std::cos(alpha) * a_part + std::sin(alpha) * b_part;
        if (both) {
            ExtremeEigenPairs ex = extreme_eigenpairs(h, eo);
            out[static_cast<std::size_t>(slot)] = {alpha, ex.top.lambda, boundary_point(ex.top.vector)};
            int mirror = slot + count / 2;
            out[static_cast<std::size_t>(mirror)] = {angles[static_cast<std::size_t>(mirror)],
                                                     -ex.bottom.lambda,
                                                     boundary_point(ex.bottom.vector)};
        } else {
            EigenPair top = top_eigenpair(h, eo);
            out[static_cast<std::size_t>(slot)] = {alpha, top.lambda, boundary_point(top.vector)};
        }
    };

    int jobs = antipodal ? count / 2 : count;
    parallel_for(
        jobs,
        [&](int i) {
            try {
                solve_angle(i, angles[static_cast<std::size_t>(i)], antipodal);
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(i)] = e.what();
            }
        },
        opt.max_threads);

    for (int i = 0; i < jobs; ++i)
        if (!errors[static_cast<std::size_t>(i)].empty()) {
            std::ostringstream msg;
            msg << "support_function: failure at alpha=" << angles[static_cast<std::size_t>(i)]
                << ": " << errors[static_cast<std::size_t>(i)];
            throw std::runtime_error(msg.str());
        }

    std::stable_sort(out.begin(), out.end(),
                     [](const SupportSample& x, const SupportSample& y) { return x.alpha < y.alpha; });
    return out;
}

bool BoundaryPolyline::is_convex(double tol) const {
    std::size_t n = points.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        cplx p0 = points[i];
        cplx p1 = points[(i + 1) % n];
        cplx p2 = points[(i + 2) % n];
        cplx e1 = p1 - p0, e2 = p2 - p1;
        double cross = e1.real() * e2.imag() - e1.imag() * e2.real();
        double scale = std::abs(e1) * std::abs(e2);
        if (cross < -tol * std::max(scale, 1e-30)) return false;
    }
    return true;
}

BoundaryPolyline hull_from_support(std::span<const SupportSample> samples) {
    std::size_t n = samples.size();
    if (n < 3) throw std::invalid_argument("hull_from_support: need at least 3 samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(samples[i].alpha > samples[i - 1].alpha))
            throw std::invalid_argument("hull_from_support: samples must be sorted by angle");

    BoundaryPolyline out;
    out.closed = true;
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        double ai = samples[i].alpha;
        double aj = samples[j].alpha + (j == 0 ? 2.0 * kPi : 0.0);
        double gap = aj - ai;
        if (gap < 1e-6 || gap > kPi - 1e-6) {
            std::ostringstream msg;
            msg << "hull_from_support: unusable angle gap " << gap << " after alpha=" << ai;
            throw std::runtime_error(msg.str());
        }
        double det = std::sin(gap);
        double ci = std::cos(ai), si = std::sin(ai);
        double cj = std::cos(aj), sj = std::sin(aj);
        double x = (samples[i].lambda * sj - samples[j].lambda * si) / det;
        double y = (samples[j].lambda * ci - samples[i].lambda * cj) / det;
        out.points.emplace_back(x, y);
    }
    return out;
}

namespace {

double point_segment_distance(cplx p, cplx a, cplx b) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double directed_hausdorff(const BoundaryPolyline& from, const BoundaryPolyline& to) {
    std::size_t m = to.points.size();
    std::size_t edges = to.closed ? m : m - 1;
    double worst = 0.0;
    for (const cplx& p : from.points) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t e = 0; e < edges; ++e)
            best = std::min(best, point_segment_distance(p, to.points[e], to.points[(e + 1) % m]));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff(const BoundaryPolyline& a, const BoundaryPolyline& b) {
    if (a.points.empty() || b.points.empty())
        throw std::invalid_argument("hausdorff: empty polyline");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double symmetry_defect(std::span<const SupportSample> samples, int p) {
    if (p < 2) throw std::invalid_argument("symmetry_defect: order must be >= 2");
    std::size_t n = samples.size();
    if (n == 0 || n % static_cast<std::size_t>(p) != 0)
        throw std::invalid_argument("symmetry_defect: angle grid is not closed under the 2 pi / p shift");
    std::size_t shift = n / static_cast<std::size_t>(p);
    double step = 2.0 * kPi / static_cast<double>(p);
    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + shift) % n;
        double da = samples[j].alpha - samples[i].alpha;
        if (j < i) da += 2.0 * kPi;
        if (std::abs(da - step) > 1e-9)
            throw std::invalid_argument("symmetry_defect: angle grid is not closed under the 2 pi / p shift");
        defect = std::max(defect, std::abs(samples[i].lambda - samples[j].lambda));
    }
    return defect;
}

}  // namespace nrc
