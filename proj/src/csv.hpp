#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace msfa {

// %.{precision}g rendering; NaN prints as "nan". One formatter everywhere
// keeps output byte-stable.
std::string format_double(double value, int precision);

// Shortest digit string that parses back to the same double ("1.18", not
// "1.1799999999999999"); for human-facing header comments.
std::string format_double_shortest(double value);

// Comma-separated rows under a block of '#' header comments. No
// timestamps or machine state ever go into the header, so identical
// inputs give identical bytes.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, int precision);

    void comment(const std::string& text);  // "# <text>\n"
    void blank();
    void columns(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);

    std::string cell(double value) const { return format_double(value, precision_); }
    static std::string cell(int value) { return std::to_string(value); }

private:
    std::ostream& os_;
    int precision_;
};

struct ExternalPoint {
    double intensity = 0.0;  // W/cm^2
    double value = 0.0;
};

// Two-column comparison data (intensity, value), '#' comments allowed,
// optional '# scale = <factor>' directive.
struct ExternalCurve {
    std::string label;  // file stem
    std::vector<ExternalPoint> points;  // ascending intensity
    double scale = 1.0;
    bool has_scale = false;

    // Log-log interpolated value, or NaN outside the tabulated range.
    double value_at(double intensity) const;
};

ExternalCurve read_external_curve(const std::string& path);

}  // namespace msfa
