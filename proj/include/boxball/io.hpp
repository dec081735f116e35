#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "boxball/carrier.hpp"
#include "boxball/mc.hpp"

namespace boxball {

// All floating output goes through this: 12 significant digits, so reruns
// diff cleanly.
inline std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// CSV with '#' comment headers carrying the run provenance.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out_ << ",";
            out_ << cells[i];
        }
        out_ << "\n";
    }

private:
    std::ostream& out_;
};

// Decimal or fraction text to an exact rational: "0.4" -> 2/5, "1/3" -> 1/3.
Rational parse_rational(const std::string& text);
std::vector<Rational> parse_density_rational(const std::string& text);
std::vector<double> parse_density(const std::string& text);

// Vertically flipped Young diagram outlines, one group per color.
void svg_young_diagrams(std::ostream& out, const YoungTuple& y);
// Limit curve with an optional empirical staircase, in rescaled coordinates.
void svg_shape(std::ostream& out, const std::vector<ShapePoint>& limit,
               const std::vector<ShapePoint>& empirical);

}  // namespace boxball
