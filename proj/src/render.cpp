#include "fusionstab/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fusionstab {

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // normalise -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10f", x);
    std::string s(buf);
    const size_t dot = s.find('.');
    size_t last = s.size() - 1;
    while (last > dot + 1 && s[last] == '0') --last;
    return s.substr(0, last + 1);
}

std::string to_dot(const Quiver& q, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (const std::string& v : q.vertices) out << "  \"" << v << "\";\n";
    for (int i = 0; i < q.adj.rows(); ++i)
        for (int j = 0; j < q.adj.cols(); ++j)
            for (Int k = 0; k < q.adj(i, j); ++k)
                out << "  \"" << q.vertices[i] << "\" -> \"" << q.vertices[j] << "\";\n";
    out << "}\n";
    return out.str();
}

namespace {

std::string coord(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x + 0.0);
    return buf;
}

}  // namespace

std::string interval_charge_svg(const StabilityFunction& zf, const TypeAQuiver& q) {
    const auto intervals = indecomposables(q);
    std::vector<std::complex<double>> charges;
    double min_len = 0.0, max_len = 0.0;
    for (const IntervalModule& m : intervals) {
        std::complex<double> w = 0.0;
        for (int v = m.a; v <= m.b; ++v) w += zf.z[v - 1];
        charges.push_back(w);
        const double len = std::abs(w);
        if (charges.size() == 1) min_len = max_len = len;
        min_len = std::min(min_len, len);
        max_len = std::max(max_len, len);
    }
    const double split = (min_len + max_len) / 2.0;
    const double extent = max_len * 1.25 + 0.25;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << coord(-extent) << " " << coord(-extent) << " " << coord(2 * extent) << " "
        << coord(2 * extent) << "\">\n";
    out << "  <line x1=\"" << coord(-extent) << "\" y1=\"0\" x2=\"" << coord(extent)
        << "\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"0.01\"/>\n";
    out << "  <line x1=\"0\" y1=\"" << coord(-extent) << "\" x2=\"0\" y2=\"" << coord(extent)
        << "\" stroke=\"#cccccc\" stroke-width=\"0.01\"/>\n";
    for (size_t i = 0; i < intervals.size(); ++i) {
        const std::complex<double> w = charges[i];
        const bool is_short = std::abs(w) <= split || max_len - min_len < 1e-9;
        const char* color = is_short ? "blue" : "red";
        // SVG y axis points down
        out << "  <line x1=\"0\" y1=\"0\" x2=\"" << coord(w.real()) << "\" y2=\""
            << coord(-w.imag()) << "\" stroke=\"" << color << "\" stroke-width=\"0.03\"/>\n";
        out << "  <text x=\"" << coord(w.real() * 1.12) << "\" y=\"" << coord(-w.imag() * 1.12)
            << "\" font-size=\"0.12\" text-anchor=\"middle\">" << intervals[i].name()
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace fusionstab
