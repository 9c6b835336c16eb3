#include "nrc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nrc {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string support_samples_csv(std::span<const SupportSample> samples) {
    std::string out = "alpha,lambda,x,y\n";
    for (const SupportSample& s : samples) {
        out += format_double(s.alpha);
        out += ',';
        out += format_double(s.lambda);
        out += ',';
        out += format_double(s.point.real());
        out += ',';
        out += format_double(s.point.imag());
        out += '\n';
    }
    return out;
}

std::string curve_samples_csv(std::span<const CurveSample> samples) {
    std::string out = "alpha,x,y\n";
    for (const CurveSample& s : samples) {
        out += format_double(s.alpha);
        out += ',';
        out += format_double(s.x);
        out += ',';
        out += format_double(s.y);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json matrix_json(const OperatorMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = m.size();
    j["basis"] = m.basis == BasisTag::monomial ? "monomial" : "guyker";
    j["symbol"] = {{"a_re", m.symbol.a.real()},
                   {"a_im", m.symbol.a.imag()},
                   {"p", m.symbol.p},
                   {"k", m.symbol.k}};
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.size(); ++i)
        for (int k = 0; k < m.size(); ++k) {
            cplx v = m.entries(i, k);
            entries.push_back(nlohmann::ordered_json::array({v.real(), v.imag()}));
        }
    j["entries"] = entries;
    return j;
}

int CsvTable::column_index(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (header) {
            table.columns = cells;
            header = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const std::string& cell : cells) {
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str())
                throw std::runtime_error("parse_csv: malformed numeric cell '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != table.columns.size())
            throw std::runtime_error("parse_csv: row width does not match header");
        table.rows.push_back(std::move(row));
    }
    if (table.columns.empty()) throw std::runtime_error("parse_csv: missing header");
    return table;
}

std::string render_svg(const std::vector<SvgCurve>& curves,
                       const std::vector<std::pair<double, double>>& markers, int width,
                       int height) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const SvgCurve& c : curves)
        for (auto [x, y] : c.points) grow(x, y);
    for (auto [x, y] : markers) grow(x, y);
    if (xmin > xmax) {
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0.0) span = 1.0;
    double margin = 0.08 * span;
    xmin -= margin;
    ymin -= margin;
    span += 2.0 * margin;
    double sx = static_cast<double>(width) / span;
    double sy = static_cast<double>(height) / span;

    auto px = [&](double x) { return (x - xmin) * sx; };
    auto py = [&](double y) { return static_cast<double>(height) - (y - ymin) * sy; };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const SvgCurve& c : curves) {
        svg += c.close ? "<polygon" : "<polyline";
        svg += " fill=\"none\" stroke=\"" + c.color + "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : c.points) svg += fmt(px(x)) + "," + fmt(py(y)) + " ";
        svg += "\"/>\n";
    }
    for (auto [x, y] : markers)
        svg += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
               "\" r=\"3\" fill=\"#b02e2e\"/>\n";
    svg += "</svg>\n";
    return svg;
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("atomic_write: short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("atomic_write: rename failed for " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_file: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nrc
