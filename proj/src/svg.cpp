#include "orbitope/svg.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace orbitope {

namespace {

using Polygon = std::vector<RatVec>;

// Sutherland-Hodgman against <a, x> <= b.
Polygon clip(const Polygon& poly, const RatVec& a, const Rational& b) {
    Polygon out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec& p = poly[i];
        const RatVec& q = poly[(i + 1) % n];
        Rational sp = dot(a, p) - b, sq = dot(a, q) - b;
        if (sp <= 0) out.push_back(p);
        if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
            Rational t = sp / (sp - sq);
            out.push_back(p + t * (q - p));
        }
    }
    Polygon dedup;
    for (const auto& v : out)
        if (dedup.empty() || dedup.back() != v) dedup.push_back(v);
    if (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

struct View {
    RatVec lo, hi;
    double scale = 40.0, margin = 30.0;

    double px(const Rational& x) const { return margin + scale * Rational(x - lo[0]).get_d(); }
    double py(const Rational& y) const { return margin + scale * Rational(hi[1] - y).get_d(); }
    double width() const { return 2 * margin + scale * Rational(hi[0] - lo[0]).get_d(); }
    double height() const { return 2 * margin + scale * Rational(hi[1] - lo[1]).get_d(); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string points(const View& v, const Polygon& poly) {
    std::string s;
    for (const auto& p : poly) s += (s.empty() ? "" : " ") + num(v.px(p[0])) + "," + num(v.py(p[1]));
    return s;
}

// Segment of the line <a, x> = b inside the box, if any.
Polygon line_in_box(const View& v, const RatVec& a, const Rational& b) {
    Polygon box{{v.lo[0], v.lo[1]}, {v.hi[0], v.lo[1]}, {v.hi[0], v.hi[1]}, {v.lo[0], v.hi[1]}};
    Polygon strip = clip(clip(box, a, b), -a, -b);
    Polygon seg;
    for (const auto& p : strip)
        if (dot(a, p) == b && (seg.empty() || seg.back() != p)) seg.push_back(p);
    if (seg.size() > 2) seg = {seg.front(), seg.back()};
    return seg;
}

void draw_line(std::ostringstream& os, const View& v, const Polygon& seg, const char* cls) {
    if (seg.size() != 2) return;
    os << "<line class=\"" << cls << "\" x1=\"" << num(v.px(seg[0][0])) << "\" y1=\"" << num(v.py(seg[0][1]))
       << "\" x2=\"" << num(v.px(seg[1][0])) << "\" y2=\"" << num(v.py(seg[1][1])) << "\"/>\n";
}

} // namespace

std::vector<RatVec> clip_to_box(const HPolyhedron& sys, const RatVec& lo, const RatVec& hi) {
    if (sys.dim() != 2) throw std::invalid_argument("plotting needs a rank-2 system");
    Polygon poly{{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}};
    for (const auto& c : sys.ineqs()) {
        poly = clip(poly, c.a, c.b);
        if (c.eq) poly = clip(poly, -c.a, -c.b);
        if (poly.empty()) break;
    }
    return poly;
}

std::string plot_svg(const OrbitPolytope& p, int extent) {
    if (p.system.dim() != 2) throw std::invalid_argument("plot supports rank-2 groups only");
    if (extent < 1) throw std::invalid_argument("plot extent must be positive");
    View v;
    v.lo = {p.Lambda[0] - extent, p.Lambda[1] - extent};
    v.hi = {p.Lambda[0] + extent, p.Lambda[1] + extent};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(v.width()) << "\" height=\""
       << num(v.height()) << "\">\n";
    os << "<style>.region{fill:#9ecae1;fill-opacity:0.6;stroke:none}"
          ".cone{fill:none;stroke:#d95f02;stroke-dasharray:6 4;stroke-width:1.5}"
          ".facet{stroke:#08519c;stroke-width:2}.wall{stroke:#555;stroke-dasharray:2 3}"
          ".axis{stroke:#000;stroke-width:0.8}text{font:12px sans-serif}</style>\n";
    os << "<title>" << p.group.key() << " Lambda=(" << ratvec_str(p.Lambda) << ")</title>\n";

    auto region = clip_to_box(p.system, v.lo, v.hi);
    if (region.size() >= 3) os << "<polygon class=\"region\" points=\"" << points(v, region) << "\"/>\n";
    auto cone = clip_to_box(root_cone(p.group, p.Lambda), v.lo, v.hi);
    if (cone.size() >= 3) os << "<polygon class=\"cone\" points=\"" << points(v, cone) << "\"/>\n";

    for (const auto& c : p.group.chamber.ineqs()) draw_line(os, v, line_in_box(v, c.a, c.b), "wall");
    for (const auto& c : p.system.ineqs()) {
        Polygon seg;
        for (const auto& q : region)
            if (dot(c.a, q) == c.b && (seg.empty() || seg.back() != q)) seg.push_back(q);
        if (seg.size() > 2) seg = {seg.front(), seg.back()};
        draw_line(os, v, seg, "facet");
    }
    draw_line(os, v, line_in_box(v, {1, 0}, 0), "axis");
    draw_line(os, v, line_in_box(v, {0, 1}, 0), "axis");

    os << "<circle cx=\"" << num(v.px(p.Lambda[0])) << "\" cy=\"" << num(v.py(p.Lambda[1]))
       << "\" r=\"3\" fill=\"#000\"/>\n";
    os << "<text x=\"" << num(v.px(p.Lambda[0]) + 5) << "\" y=\"" << num(v.py(p.Lambda[1]) - 5)
       << "\">Lambda</text>\n";
    os << "<text x=\"" << num(v.width() - v.margin) << "\" y=\"" << num(v.height() - 8) << "\">xi1</text>\n";
    os << "<text x=\"4\" y=\"" << num(v.margin - 10) << "\">xi2</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace orbitope
