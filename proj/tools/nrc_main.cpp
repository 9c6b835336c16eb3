// Command-line front end: build elliptic symbols and operator compressions,
// run support-function sweeps, emit closed-form boundary curves, compare the
// two, and run the check suites.  All outputs are deterministic for fixed
// flags and seed.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "nrc/checks.hpp"
#include "nrc/io.hpp"
#include "nrc/moebius.hpp"
#include "nrc/numrange.hpp"
#include "nrc/order2.hpp"
#include "nrc/order3.hpp"

namespace {

using nrc::cplx;

struct CommonFlags {
    std::vector<double> a{0.5, 0.0};
    int order = 2;
    int mult_index = 1;
    int n = 0;  // 0 -> default truncation for |a|
    int angle_count = 720;
    std::uint64_t seed = 1;
    int trials = 10000;
    std::string out;
    std::string basis = "monomial";
};

cplx fixed_point(const CommonFlags& f) { return {f.a[0], f.a[1]}; }

nrc::BasisTag basis_tag(const std::string& name) {
    if (name == "monomial") return nrc::BasisTag::monomial;
    if (name == "guyker") return nrc::BasisTag::guyker;
    throw CLI::ValidationError("--basis must be monomial or guyker");
}

int truncation_for(const CommonFlags& f) {
    return f.n > 0 ? f.n : nrc::default_truncation(fixed_point(f));
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::fwrite(content.data(), 1, content.size(), stdout);
    else
        nrc::atomic_write(out_path, content);
}

void add_symbol_flags(CLI::App* cmd, CommonFlags& f, bool with_order = true) {
    cmd->add_option("--a", f.a, "Fixed point as two reals: re im")->expected(2);
    if (with_order) cmd->add_option("--order", f.order, "Order p of the symbol");
    cmd->add_option("--mult-index", f.mult_index, "Multiplier index k (gcd(k, p) = 1)");
}

nrc::OperatorMatrix build_matrix(const CommonFlags& f) {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(fixed_point(f), f.order, f.mult_index);
    if (sym.warning) std::cerr << "warning: " << *sym.warning << "\n";
    return basis_tag(f.basis) == nrc::BasisTag::monomial
               ? nrc::composition_matrix(sym, truncation_for(f))
               : nrc::guyker_matrix(sym, truncation_for(f));
}

int cmd_symbol(const CommonFlags& f) {
    nrc::EllipticSymbol sym = nrc::elliptic_symbol(fixed_point(f), f.order, f.mult_index);
    if (sym.warning) std::cerr << "warning: " << *sym.warning << "\n";
    const Eigen::Matrix2cd& m = sym.map.matrix();
    std::string out;
    auto fmt = [](cplx z) {
        return nrc::format_double(z.real()) + (z.imag() < 0 ? "" : "+") +
               nrc::format_double(z.imag()) + "i";
    };
    out += "moebius matrix (normalized):\n";
    out += "  [" + fmt(m(0, 0)) + ", " + fmt(m(0, 1)) + "]\n";
    out += "  [" + fmt(m(1, 0)) + ", " + fmt(m(1, 1)) + "]\n";
    out += "fixed point residual: " +
           nrc::format_double(std::abs(sym.map(sym.a) - sym.a)) + "\n";
    out += "multiplier: " + fmt(sym.multiplier()) + "\n";
    out += "derivative residual: " +
           nrc::format_double(std::abs(sym.map.derivative(sym.a) - sym.multiplier())) + "\n";
    out += "order residual: " +
           nrc::format_double(nrc::moebius_power(sym.map, sym.p).identity_residual()) + "\n";
    emit(f.out, out);
    return 0;
}

int cmd_matrix(const CommonFlags& f) {
    nrc::OperatorMatrix m = build_matrix(f);
    emit(f.out, nrc::matrix_json(m).dump(2) + "\n");
    return 0;
}

int cmd_range(const CommonFlags& f) {
    nrc::OperatorMatrix m = build_matrix(f);
    nrc::SweepOptions sweep;
    sweep.eigen.seed = f.seed;
    auto samples = nrc::support_function(m, nrc::uniform_angles(f.angle_count), sweep);
    emit(f.out, nrc::support_samples_csv(samples));
    return 0;
}

int cmd_closedform(const CommonFlags& f, const std::string& emit_what) {
    cplx a = fixed_point(f);
    if (emit_what == "sextic") {
        if (f.order != 3) throw CLI::ValidationError("--emit sextic requires --order 3");
        nrc::Order3Geometry geo = nrc::geometry_of(a);
        nrc::SexticCurve c = nrc::sextic_coeffs(geo.big_l);
        nlohmann::ordered_json j;
        j["L"] = c.big_l;
        j["coefficients"] = {{"P", c.p},           {"Q", c.q},
                             {"c_mixed", c.c_mixed}, {"c_quartic", c.c_quartic},
                             {"c_cubic", c.c_cubic}, {"c_quadratic", c.c_quadratic},
                             {"c_const", c.c_const}};
        emit(f.out, j.dump(2) + "\n");
        return 0;
    }
    std::vector<nrc::SupportSample> samples;
    std::vector<double> angles = nrc::uniform_angles(f.angle_count);
    if (f.order == 2) {
        nrc::EllipseModel ellipse = nrc::ellipse_params(a);
        for (double alpha : angles)
            samples.push_back({alpha, nrc::ellipse_support(ellipse, alpha),
                               nrc::ellipse_boundary_point(ellipse, alpha)});
    } else if (f.order == 3) {
        nrc::Order3Geometry geo = nrc::geometry_of(a);
        for (double alpha : angles)
            samples.push_back({alpha, nrc::lambda0(alpha, geo), nrc::envelope_point(alpha, geo)});
    } else {
        throw CLI::ValidationError("closedform: only orders 2 and 3 have closed forms");
    }
    emit(f.out, nrc::support_samples_csv(samples));
    return 0;
}

int cmd_compare(const CommonFlags& f) {
    nrc::CompareOptions opt;
    opt.n = truncation_for(f);
    opt.angle_count = f.angle_count;
    opt.multiplier_index = f.mult_index;
    opt.basis = basis_tag(f.basis);
    opt.seed = f.seed;
    if (opt.n >= 4) opt.smaller_truncations = {opt.n / 4, opt.n / 2};
    nrc::CompareResult res = nrc::compare_numeric_closed(fixed_point(f), f.order, opt);

    nlohmann::ordered_json j;
    j["a"] = {res.a.real(), res.a.imag()};
    j["order"] = res.p;
    j["n"] = res.n;
    j["angles"] = res.angle_count;
    j["symmetry_defect"] = res.symmetry_defect;
    j["monotonicity_ok"] = res.monotonicity_ok;
    if (res.has_closed_form) {
        j["hausdorff"] = res.hausdorff_distance;
        j["sup_support_gap"] = res.sup_support_gap;
        j["min_support_gap"] = res.min_support_gap;
        j["upper_bound_ok"] = res.upper_bound_ok;
    } else {
        j["hausdorff"] = nullptr;
        j["sup_support_gap"] = nullptr;
        j["min_support_gap"] = nullptr;
        j["upper_bound_ok"] = nullptr;
    }
    emit(f.out, j.dump(2) + "\n");
    return 0;
}

int cmd_curve(const CommonFlags& f, double big_l) {
    nrc::SexticCurve c = nrc::sextic_coeffs(big_l);
    nrc::SingularityReport sing = nrc::singularity_report(c);
    nrc::FociReport foci = nrc::foci_check(big_l);

    nlohmann::ordered_json j;
    j["L"] = big_l;
    j["coefficients"] = {{"P", c.p},           {"Q", c.q},
                         {"c_mixed", c.c_mixed}, {"c_quartic", c.c_quartic},
                         {"c_cubic", c.c_cubic}, {"c_quadratic", c.c_quadratic},
                         {"c_const", c.c_const}};
    nlohmann::ordered_json cusps = nlohmann::ordered_json::array();
    for (const nrc::CuspCheck& cc : sing.cusps)
        cusps.push_back({{"x", cc.x}, {"y", cc.y}, {"gradient_residual", cc.gradient_residual},
                         {"pass", cc.pass}});
    j["cusps"] = cusps;
    nlohmann::ordered_json splits = nlohmann::ordered_json::array();
    for (auto [kappa, tau] : sing.plucker_splits)
        splits.push_back({{"kappa", kappa}, {"tau", tau}});
    j["plucker_splits"] = splits;
    j["foci"] = {{"worst_line_residual", foci.worst}, {"pass", foci.pass}};

    // Axis factorization residual, same check the order-3 suite runs.
    double cx = 3.0 / (4.0 * big_l);
    std::array<double, 7> expect{};
    std::array<double, 4> lhs{1.0, -3.0 * cx, 3.0 * cx * cx, -cx * cx * cx};
    std::array<double, 4> rhs{1.0, 0.0, -big_l, -0.25};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) expect[static_cast<std::size_t>(i + k)] += lhs[static_cast<std::size_t>(i)] * rhs[static_cast<std::size_t>(k)];
    std::array<double, 7> axis = nrc::sextic_on_axis(c);
    double worst = 0.0;
    for (int d = 0; d < 7; ++d)
        worst = std::max(worst, std::abs(axis[static_cast<std::size_t>(d)] - expect[static_cast<std::size_t>(d)]) /
                                    std::max(1.0, std::abs(expect[static_cast<std::size_t>(d)])));
    j["axis_factorization"] = {{"worst_relative_residual", worst}, {"pass", worst <= 1e-12}};

    emit(f.out, j.dump(2) + "\n");
    bool ok = sing.pass && foci.pass && worst <= 1e-12;
    return ok ? 0 : 1;
}

int cmd_check(const CommonFlags& f, const std::string& suite) {
    auto reports = nrc::run_suites(suite, fixed_point(f), f.trials, f.seed);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    bool pass = true;
    for (const nrc::CheckReport& r : reports) {
        j.push_back(r.to_json());
        pass = pass && r.pass;
    }
    emit(f.out, j.dump(2) + "\n");
    return pass ? 0 : 1;
}

int cmd_plot(const CommonFlags& f, const std::vector<std::string>& inputs, int foci_order) {
    if (inputs.empty()) throw CLI::ValidationError("plot: need at least one --in CSV");
    const char* palette[] = {"#16425b", "#b02e2e", "#3a7d44", "#7d3a6f"};
    std::vector<nrc::SvgCurve> curves;
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
        nrc::CsvTable table = nrc::parse_csv(nrc::read_file(inputs[idx]));
        int xcol = table.column_index("x");
        int ycol = table.column_index("y");
        if (xcol < 0 || ycol < 0)
            throw std::runtime_error("plot: CSV " + inputs[idx] + " lacks x/y columns");
        nrc::SvgCurve c;
        c.color = palette[idx % 4];
        for (const auto& row : table.rows)
            c.points.emplace_back(row[static_cast<std::size_t>(xcol)],
                                  row[static_cast<std::size_t>(ycol)]);
        curves.push_back(std::move(c));
    }
    std::vector<std::pair<double, double>> markers;
    if (foci_order >= 2)
        for (int k = 0; k < foci_order; ++k) {
            double t = 2.0 * 3.14159265358979323846 * k / foci_order;
            markers.emplace_back(std::cos(t), std::sin(t));
        }
    emit(f.out, nrc::render_svg(curves, markers));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical ranges of composition operators with finite-order elliptic symbols"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string emit_what = "samples";
    std::string suite = "all";
    double big_l = 1.0;
    std::vector<std::string> plot_inputs;
    int foci_order = 0;

    CLI::App* sym = app.add_subcommand("symbol", "print the Moebius data of an elliptic symbol");
    add_symbol_flags(sym, f);
    sym->add_option("--out", f.out, "Output path (default stdout)");

    CLI::App* mat = app.add_subcommand("matrix", "write an operator compression as JSON");
    add_symbol_flags(mat, f);
    mat->add_option("--N", f.n, "Truncation size (default by |a|)");
    mat->add_option("--basis", f.basis, "monomial | guyker");
    mat->add_option("--out", f.out, "Output path (default stdout)");

    CLI::App* rng = app.add_subcommand("range", "numeric support-function sweep to CSV");
    add_symbol_flags(rng, f);
    rng->add_option("--N", f.n, "Truncation size (default by |a|)");
    rng->add_option("--angles", f.angle_count, "Number of sweep angles");
    rng->add_option("--basis", f.basis, "monomial | guyker");
    rng->add_option("--seed", f.seed, "Eigensolver start-vector seed");
    rng->add_option("--out", f.out, "Output path (default stdout)");

    CLI::App* closed = app.add_subcommand("closedform", "closed-form boundary samples to CSV");
    add_symbol_flags(closed, f);
    closed->add_option("--angles", f.angle_count, "Number of samples");
    closed->add_option("--emit", emit_what, "samples | sextic");
    closed->add_option("--out", f.out, "Output path (default stdout)");

    CLI::App* cmp = app.add_subcommand("compare", "numeric sweep vs closed form");
    add_symbol_flags(cmp, f);
    cmp->add_option("--N", f.n, "Truncation size (default by |a|)");
    cmp->add_option("--angles", f.angle_count, "Number of sweep angles");
    cmp->add_option("--basis", f.basis, "monomial | guyker");
    cmp->add_option("--seed", f.seed, "Eigensolver start-vector seed");
    cmp->add_option("--out", f.out, "Output path (default stdout)");

    CLI::App* curve = app.add_subcommand("curve", "sextic coefficients and structure checks");
    curve->add_option("--L", big_l, "Curve constant L (> 3/4)")->required();
    curve->add_option("--out", f.out, "Output path (default stdout)");

    CLI::App* check = app.add_subcommand("check", "run a property suite, emit a JSON report");
    add_symbol_flags(check, f, false);
    check->add_option("--suite", suite, "observations | identities | order2 | order3 | all");
    check->add_option("--trials", f.trials, "Random trials per suite");
    check->add_option("--seed", f.seed, "Sampler seed");
    check->add_option("--out", f.out, "Output path (default stdout)");

    CLI::App* plot = app.add_subcommand("plot", "render CSV boundaries as SVG");
    plot->add_option("--in", plot_inputs, "Input CSV path(s)");
    plot->add_option("--foci", foci_order, "Mark the p-th roots of unity");
    plot->add_option("--out", f.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (sym->parsed()) return cmd_symbol(f);
        if (mat->parsed()) return cmd_matrix(f);
        if (rng->parsed()) return cmd_range(f);
        if (closed->parsed()) return cmd_closedform(f, emit_what);
        if (cmp->parsed()) return cmd_compare(f);
        if (curve->parsed()) return cmd_curve(f, big_l);
        if (check->parsed()) return cmd_check(f, suite);
        if (plot->parsed()) return cmd_plot(f, plot_inputs, foci_order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
