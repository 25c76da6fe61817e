#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "errors.hpp"
#include "interp.hpp"

namespace msfa {

std::string format_double(double value, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

std::string format_double_shortest(double value) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& os, int precision)
    : os_(os), precision_(precision) {}

void CsvWriter::comment(const std::string& text) { os_ << "# " << text << "\n"; }

void CsvWriter::blank() { os_ << "\n"; }

void CsvWriter::columns(const std::vector<std::string>& names) {
    row(names);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ",";
        os_ << cells[i];
    }
    os_ << "\n";
}

double ExternalCurve::value_at(double intensity) const {
    if (points.size() < 2 || intensity < points.front().intensity ||
        intensity > points.back().intensity)
        return std::numeric_limits<double>::quiet_NaN();
    size_t hi = 1;
    while (hi < points.size() && points[hi].intensity < intensity) ++hi;
    if (hi == points.size()) hi = points.size() - 1;
    const ExternalPoint& a = points[hi - 1];
    const ExternalPoint& b = points[hi];
    return loglog_interp(intensity, a.intensity, a.value, b.intensity, b.value);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

}  // namespace

ExternalCurve read_external_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read external curve '" + path + "'");
    ExternalCurve curve;
    curve.label = stem_of(path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = path + ":" + std::to_string(line_no);
        std::string body = trim(line);
        if (body.empty()) continue;
        if (body[0] == '#') {
            std::string directive = trim(body.substr(1));
            const auto eq = directive.find('=');
            if (eq != std::string::npos &&
                trim(directive.substr(0, eq)) == "scale") {
                const std::string v = trim(directive.substr(eq + 1));
                try {
                    size_t pos = 0;
                    curve.scale = std::stod(v, &pos);
                    if (pos != v.size() || !std::isfinite(curve.scale))
                        throw std::invalid_argument(v);
                } catch (const std::exception&) {
                    throw IoError(where + ": bad scale directive '" + v + "'");
                }
                curve.has_scale = true;
            }
            continue;
        }
        // Data row: two numbers separated by a comma and/or whitespace.
        for (char& c : body)
            if (c == ',' || c == '\t') c = ' ';
        std::istringstream fields(body);
        ExternalPoint pt;
        std::string rest;
        if (!(fields >> pt.intensity >> pt.value) || (fields >> rest, !rest.empty()))
            throw IoError(where + ": expected two numeric columns");
        if (!std::isfinite(pt.intensity) || !std::isfinite(pt.value))
            throw IoError(where + ": non-finite value");
        if (!curve.points.empty() &&
            !(pt.intensity > curve.points.back().intensity))
            throw IoError(where + ": intensities must be strictly ascending");
        curve.points.push_back(pt);
    }
    if (curve.points.size() < 2)
        throw IoError(path + ": need at least 2 data rows");
    return curve;
}

}  // namespace msfa
