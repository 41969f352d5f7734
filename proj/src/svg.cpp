#include "orthoradial/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace orthoradial {

namespace {

constexpr double kScale = 40.0;
constexpr double kPi = 3.14159265358979323846;

std::string num(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

struct Polar {
    double cx, cy;
    std::int64_t k;

    double radius(std::int64_t layer) const { return kScale * static_cast<double>(layer); }
    double angle(double column) const { return 2.0 * kPi * column / static_cast<double>(k); }
    double x(double column, std::int64_t layer) const {
        return cx + radius(layer) * std::sin(angle(column));
    }
    double y(double column, std::int64_t layer) const {
        return cy - radius(layer) * std::cos(angle(column));
    }
};

} // namespace

std::string render_svg(const DrawingDoc& doc, SvgView view) {
    std::int64_t max_layer = 1;
    for (const auto& v : doc.vertices)
        max_layer = std::max(max_layer, v.layer);
    const std::int64_t k = doc.circumference;

    std::ostringstream out;
    if (view == SvgView::Polar) {
        double size = 2.0 * kScale * static_cast<double>(max_layer + 1);
        Polar polar{size / 2.0, size / 2.0, k};
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size)
            << "\" height=\"" << num(size) << "\" viewBox=\"0 0 " << num(size) << " " << num(size)
            << "\">\n";
        // grid: one circle per layer, one spoke per column
        for (std::int64_t layer = 1; layer <= max_layer; ++layer)
            out << "  <circle class=\"grid\" cx=\"" << num(polar.cx) << "\" cy=\"" << num(polar.cy)
                << "\" r=\"" << num(polar.radius(layer))
                << "\" fill=\"none\" stroke=\"#ddd\"/>\n";
        for (std::int64_t column = 0; column < k; ++column)
            out << "  <line class=\"grid\" x1=\"" << num(polar.x(column, 1)) << "\" y1=\""
                << num(polar.y(column, 1)) << "\" x2=\"" << num(polar.x(column, max_layer))
                << "\" y2=\"" << num(polar.y(column, max_layer)) << "\" stroke=\"#ddd\"/>\n";
        for (const auto& e : doc.edges) {
            const auto& a = doc.vertices[e.tail];
            const auto& b = doc.vertices[e.head];
            out << "  <path class=\"edge\" d=\"M " << num(polar.x(a.column, a.layer)) << " "
                << num(polar.y(a.column, a.layer));
            if (e.dir == Direction::Up || e.dir == Direction::Down) {
                out << " L " << num(polar.x(b.column, b.layer)) << " "
                    << num(polar.y(b.column, b.layer));
            } else {
                // Horizontal edges are arcs on the tail's circle; sweep
                // clockwise for right-pointing edges.
                double r = polar.radius(a.layer);
                int sweep = e.dir == Direction::Right ? 1 : 0;
                int large = e.length * 2 > k ? 1 : 0;
                out << " A " << num(r) << " " << num(r) << " 0 " << large << " " << sweep << " "
                    << num(polar.x(b.column, b.layer)) << " " << num(polar.y(b.column, b.layer));
            }
            out << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
        }
        for (size_t v = 0; v < doc.vertices.size(); ++v) {
            const auto& c = doc.vertices[v];
            out << "  <circle class=\"vertex\" cx=\"" << num(polar.x(c.column, c.layer))
                << "\" cy=\"" << num(polar.y(c.column, c.layer)) << "\" r=\"3\"/>\n"
                << "  <text class=\"label\" x=\"" << num(polar.x(c.column, c.layer) + 5)
                << "\" y=\"" << num(polar.y(c.column, c.layer) - 5) << "\">" << doc.vertex_names[v]
                << "</text>\n";
        }
        out << "</svg>\n";
    } else {
        // Unrolled cylinder: columns to the right, layers upward.
        double width = kScale * static_cast<double>(k);
        double height = kScale * static_cast<double>(max_layer + 1);
        auto x_of = [&](double column) { return kScale * column; };
        auto y_of = [&](std::int64_t layer) {
            return height - kScale * static_cast<double>(layer);
        };
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
            << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
            << num(height) << "\">\n";
        for (std::int64_t layer = 1; layer <= max_layer; ++layer)
            out << "  <line class=\"grid\" x1=\"0\" y1=\"" << num(y_of(layer)) << "\" x2=\""
                << num(width) << "\" y2=\"" << num(y_of(layer)) << "\" stroke=\"#ddd\"/>\n";
        for (std::int64_t column = 0; column < k; ++column)
            out << "  <line class=\"grid\" x1=\"" << num(x_of(double(column))) << "\" y1=\""
                << num(y_of(1)) << "\" x2=\"" << num(x_of(double(column))) << "\" y2=\""
                << num(y_of(max_layer)) << "\" stroke=\"#ddd\"/>\n";
        for (const auto& e : doc.edges) {
            const auto& a = doc.vertices[e.tail];
            const auto& b = doc.vertices[e.head];
            out << "  <path class=\"edge";
            if (e.dir == Direction::Up || e.dir == Direction::Down) {
                out << "\" d=\"M " << num(x_of(double(a.column))) << " " << num(y_of(a.layer))
                    << " L " << num(x_of(double(b.column))) << " " << num(y_of(b.layer));
            } else {
                // Walk from the west end of the run; split edges that cross
                // the cut at column 0 into two marked pieces.
                std::int64_t west = e.dir == Direction::Right ? a.column : b.column;
                std::int64_t east = west + e.length;
                double y = y_of(a.layer);
                if (east <= k) {
                    out << "\" d=\"M " << num(x_of(double(west))) << " " << num(y) << " L "
                        << num(x_of(double(east))) << " " << num(y);
                } else {
                    out << " wrap\" d=\"M " << num(x_of(double(west))) << " " << num(y) << " L "
                        << num(x_of(double(k))) << " " << num(y) << " M 0 " << num(y) << " L "
                        << num(x_of(double(east - k))) << " " << num(y);
                }
            }
            out << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
        }
        for (size_t v = 0; v < doc.vertices.size(); ++v) {
            const auto& c = doc.vertices[v];
            out << "  <circle class=\"vertex\" cx=\"" << num(x_of(double(c.column))) << "\" cy=\""
                << num(y_of(c.layer)) << "\" r=\"3\"/>\n"
                << "  <text class=\"label\" x=\"" << num(x_of(double(c.column)) + 5) << "\" y=\""
                << num(y_of(c.layer) - 5) << "\">" << doc.vertex_names[v] << "</text>\n";
        }
        out << "</svg>\n";
    }
    return out.str();
}

} // namespace orthoradial
