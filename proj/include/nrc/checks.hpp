#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrc/bounds.hpp"
#include "nrc/numrange.hpp"
#include "nrc/order2.hpp"
#include "nrc/order3.hpp"
#include "nrc/report.hpp"

namespace nrc {

// Quadratic-form identity residuals over random and extremal eigenspace
// samples, plus the coupling-matrix/operator consistency check.
CheckReport identities_suite(cplx a, int trials, std::uint64_t seed);

// Exclusion statistics (strict interior of the ellipse), the pair
// correlation bound with near-extremal probes, and the pointwise
// numeric <= closed-form support comparison at small truncations.
CheckReport order2_suite(cplx a, int trials, std::uint64_t seed);

// Closed-form curve structure for order 3: the two support-value routes,
// periodicity, envelope-on-curve and line-on-cubic incidences, the axis
// factorization, cusps, foci, the determinant identity on random draws and
// root monotonicity in the correlations.
CheckReport order3_suite(cplx a, std::uint64_t seed);

// Suites by name: observations | identities | order2 | order3 | all.
std::vector<CheckReport> run_suites(const std::string& which, cplx a, int trials,
                                    std::uint64_t seed);

struct CompareOptions {
    int n = 512;
    int angle_count = 720;
    int multiplier_index = 1;
    BasisTag basis = BasisTag::monomial;
    std::uint64_t seed = 1;
    std::vector<int> smaller_truncations;  // for the monotone-convergence check
};

// Numeric sweep vs closed form (orders 2 and 3; other orders run the sweep
// and the symmetry check only).
struct CompareResult {
    cplx a;
    int p = 0;
    int n = 0;
    int angle_count = 0;
    bool has_closed_form = false;
    double hausdorff_distance = 0.0;
    double sup_support_gap = 0.0;  // max over alpha of closed-form - numeric
    double min_support_gap = 0.0;  // min over alpha (>= -1e-9 when the bound holds)
    bool upper_bound_ok = true;    // closed-form dominates at every N and alpha
    bool monotonicity_ok = true;   // support values nondecreasing in N
    double symmetry_defect = 0.0;
    std::vector<SupportSample> samples;  // at the largest truncation
};

CompareResult compare_numeric_closed(cplx a, int p, const CompareOptions& opt = {});

}  // namespace nrc
