#include "rotsys/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rotsys {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<Point>& pts, const EdgeList& base,
                       const EdgeList& highlight) {
    if (pts.empty())
        throw std::invalid_argument("render_svg: no points");
    const int n = static_cast<int>(pts.size());
    auto check = [n](const EdgeList& es) {
        for (const Edge& e : es)
            if (e.u < 1 || e.v < 1 || e.u > n || e.v > n)
                throw std::invalid_argument(
                    "render_svg: edge id out of range");
    };
    check(base);
    check(highlight);

    double xmin = pts[0].x, xmax = pts[0].x;
    double ymin = pts[0].y, ymax = pts[0].y;
    for (const Point& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double pad = 40.0, scale = 640.0 / span;
    const double W = (xmax - xmin) * scale + 2 * pad;
    const double H = (ymax - ymin) * scale + 2 * pad;
    // picture y grows downward, drawing y grows upward
    auto X = [&](VertexId v) { return pad + (pts[v - 1].x - xmin) * scale; };
    auto Y = [&](VertexId v) { return pad + (ymax - pts[v - 1].y) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
       << num(W) << ' ' << num(H) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const Edge& e : base)
        os << "<line x1=\"" << num(X(e.u)) << "\" y1=\"" << num(Y(e.u))
           << "\" x2=\"" << num(X(e.v)) << "\" y2=\"" << num(Y(e.v))
           << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    for (const Edge& e : highlight)
        os << "<line x1=\"" << num(X(e.u)) << "\" y1=\"" << num(Y(e.u))
           << "\" x2=\"" << num(X(e.v)) << "\" y2=\"" << num(Y(e.v))
           << "\" stroke=\"#d62728\" stroke-width=\"2.5\"/>\n";
    for (VertexId v = 1; v <= n; ++v) {
        os << "<circle cx=\"" << num(X(v)) << "\" cy=\"" << num(Y(v))
           << "\" r=\"4\" fill=\"#222222\"/>\n";
        os << "<text x=\"" << num(X(v) + 6) << "\" y=\"" << num(Y(v) - 6)
           << "\" font-family=\"sans-serif\" font-size=\"13\">" << v
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace rotsys
