#include "convextri/svg.hpp"

#include <cmath>
#include <cstdio>

namespace convextri {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Point {
    double x, y;
};

Point vertex_point(int i, int n, double radius) {
    double theta = kPi / 2 - 2 * kPi * i / n;
    // SVG y grows downward; negate to put v0 on top with clockwise indices
    return {radius * std::cos(theta), -radius * std::sin(theta)};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0); // normalize -0
    return buf;
}

void emit_line(std::string& out, Point a, Point b) {
    out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
           "\" y2=\"" + num(b.y) + "\"/>\n";
}

} // namespace

std::string render_svg(const ConvexInstance& inst, const std::optional<Triangulation>& tri) {
    const int n = inst.n();
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\">\n";

    out += "<g stroke=\"#000000\" stroke-width=\"0.015\" fill=\"none\">\n";
    for (int i = 0; i < n; ++i) {
        Chord c(i, (i + 1) % n);
        if (inst.contains(c)) continue; // forbidden boundary edges render dashed below
        emit_line(out, vertex_point(i, n, 1.0), vertex_point((i + 1) % n, n, 1.0));
    }
    out += "</g>\n";

    out += "<g stroke=\"#cc2222\" stroke-width=\"0.012\" stroke-dasharray=\"0.05,0.03\" "
           "fill=\"none\">\n";
    for (const Chord& c : inst.forbidden())
        emit_line(out, vertex_point(c.a, n, 1.0), vertex_point(c.b, n, 1.0));
    out += "</g>\n";

    out += "<g stroke=\"#2244cc\" stroke-width=\"0.014\" fill=\"none\">\n";
    if (tri)
        for (const Chord& c : tri->diagonals)
            emit_line(out, vertex_point(c.a, n, 1.0), vertex_point(c.b, n, 1.0));
    out += "</g>\n";

    out += "<g fill=\"#000000\">\n";
    for (int i = 0; i < n; ++i) {
        Point p = vertex_point(i, n, 1.0);
        out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"0.025\"/>\n";
    }
    out += "</g>\n";

    out += "<g font-family=\"Helvetica,Arial,sans-serif\" font-size=\"0.11\" "
           "text-anchor=\"middle\" fill=\"#000000\">\n";
    for (int i = 0; i < n; ++i) {
        Point p = vertex_point(i, n, 1.12);
        out += "<text x=\"" + num(p.x) + "\" y=\"" + num(p.y + 0.04) + "\">v" +
               std::to_string(i) + "</text>\n";
    }
    out += "</g>\n";
    out += "</svg>\n";
    return out;
}

} // namespace convextri
