#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nrc/numrange.hpp"
#include "nrc/operator.hpp"

namespace nrc {

// All emitters produce byte-identical output for identical inputs: fixed
// "%.17g" formatting, LF line endings, insertion-ordered JSON keys.

std::string format_double(double v);  // 17 significant digits

// Header alpha,lambda,x,y; one row per sample.
std::string support_samples_csv(std::span<const SupportSample> samples);

// Header alpha,x,y (envelope / closed-form curves).
struct CurveSample {
    double alpha = 0.0;
    double x = 0.0;
    double y = 0.0;
};
std::string curve_samples_csv(std::span<const CurveSample> samples);

// OperatorMatrix as {n, basis, symbol{a_re, a_im, p, k}, entries: row-major
// [re, im] pairs}.
nlohmann::ordered_json matrix_json(const OperatorMatrix& m);

// Parsed CSV with named columns (doubles only).
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column_index(const std::string& name) const;  // -1 when absent
};
CsvTable parse_csv(const std::string& text);

// Minimal static SVG: one polyline per curve, optional focus markers.
struct SvgCurve {
    std::vector<std::pair<double, double>> points;
    std::string color = "#16425b";
    bool close = true;
};
std::string render_svg(const std::vector<SvgCurve>& curves,
                       const std::vector<std::pair<double, double>>& markers,
                       int width = 640, int height = 640);

// Write-to-temp-then-rename; the destination is never seen half-written.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace nrc
