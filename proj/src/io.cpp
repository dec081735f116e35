#include "boxball/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "boxball/schur.hpp"

namespace boxball {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const Rational num(boost::multiprecision::cpp_int(text.substr(0, slash)));
        const Rational den(boost::multiprecision::cpp_int(text.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return num / den;
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    boost::multiprecision::cpp_int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    boost::multiprecision::cpp_int num(whole.empty() ? "0" : whole);
    num *= den;
    if (!frac.empty()) num += boost::multiprecision::cpp_int(frac);
    return Rational(num) / Rational(den);
}

std::vector<Rational> parse_density_rational(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (!tok.empty()) out.push_back(parse_rational(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty density list");
    validate_density(out);
    return out;
}

std::vector<double> parse_density(const std::string& text) {
    const auto rational = parse_density_rational(text);
    std::vector<double> out(rational.size());
    for (std::size_t i = 0; i < rational.size(); ++i) out[i] = rational[i].convert_to<double>();
    return out;
}

void svg_young_diagrams(std::ostream& out, const YoungTuple& y) {
    const int cell = 14;
    const int gap = 3 * cell;
    int total_w = 0;
    int total_h = 0;
    for (int a = 1; a <= y.kappa; ++a) {
        total_w += static_cast<int>(y.row(a, 1)) * cell + gap;
        total_h = std::max(total_h, y.depth(a) * cell);
    }
    total_w = std::max(total_w, cell);
    total_h = std::max(total_h + 2 * cell, 3 * cell);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\""
        << total_h << "\">\n";
    int x0 = cell / 2;
    const int base = total_h - cell / 2;
    for (int a = 1; a <= y.kappa; ++a) {
        out << "<g fill=\"none\" stroke=\"black\">\n";
        // vertical flip: row i sits i cells above the baseline
        for (int i = 1; i <= y.depth(a); ++i)
            for (long long j = 0; j < y.row(a, i); ++j)
                out << "<rect x=\"" << x0 + j * cell << "\" y=\"" << base - i * cell
                    << "\" width=\"" << cell << "\" height=\"" << cell << "\"/>\n";
        out << "</g>\n";
        x0 += static_cast<int>(std::max<long long>(y.row(a, 1), 1)) * cell + gap;
    }
    out << "</svg>\n";
}

void svg_shape(std::ostream& out, const std::vector<ShapePoint>& limit,
               const std::vector<ShapePoint>& empirical) {
    const double width = 480.0, height = 360.0, margin = 20.0;
    double x_max = 1e-9, y_max = 1.0;
    for (const auto& pt : limit) {
        x_max = std::max(x_max, pt.x);
        y_max = std::max(y_max, static_cast<double>(pt.i));
    }
    for (const auto& pt : empirical) {
        x_max = std::max(x_max, pt.x);
        y_max = std::max(y_max, static_cast<double>(pt.i));
    }
    auto sx = [&](double x) { return margin + x / x_max * (width - 2 * margin); };
    auto sy = [&](double i) { return height - margin - i / y_max * (height - 2 * margin); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    if (!empirical.empty()) {
        // staircase boundary of the rescaled diagram
        out << "<polyline fill=\"none\" stroke=\"gray\" points=\"";
        double prev_i = 0.0;
        for (const auto& pt : empirical) {
            out << format_g12(sx(pt.x)) << "," << format_g12(sy(prev_i)) << " ";
            out << format_g12(sx(pt.x)) << "," << format_g12(sy(static_cast<double>(pt.i))) << " ";
            prev_i = static_cast<double>(pt.i);
        }
        out << "\"/>\n";
    }
    if (!limit.empty()) {
        out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
        out << format_g12(sx(limit.front().x)) << "," << format_g12(sy(0.0)) << " ";
        for (const auto& pt : limit)
            out << format_g12(sx(pt.x)) << "," << format_g12(sy(static_cast<double>(pt.i))) << " ";
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace boxball
