#include <hypack/svg.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypack {

namespace {

struct Viewport {
    double x0 = 0, y0 = 0, scale = 1, height = 600, width = 800;

    double sx(double x) const { return (x - x0) * scale; }
    // world y up, svg y down
    double sy(double y) const { return height - (y - y0) * scale; }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

Viewport fit_viewport(const Rect& world) {
    Viewport v;
    const double pad = 0.05;
    const double wx0 = rat_d(world.x0), wx1 = rat_d(world.x1);
    const double wy0 = rat_d(world.y0), wy1 = rat_d(world.y1);
    const double spanx = std::max(wx1 - wx0, 1e-9);
    const double spany = std::max(wy1 - wy0, 1e-9);
    const double padx = spanx * pad, pady = spany * pad;
    v.scale = std::min(800.0 / (spanx + 2 * padx), 600.0 / (spany + 2 * pady));
    v.width = (spanx + 2 * padx) * v.scale;
    v.height = (spany + 2 * pady) * v.scale;
    v.x0 = wx0 - padx;
    v.y0 = wy0 - pady;
    return v;
}

void stroke_region(std::ostringstream& out, const Viewport& v, const RectRegion& r,
                   const char* color, double width) {
    if (r.empty()) return;
    out << "  <path fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << fmt(width) << "\" d=\"";
    for (const auto& s : boundary_segments(r)) {
        if (s.vertical)
            out << "M" << fmt(v.sx(rat_d(s.at))) << " " << fmt(v.sy(rat_d(s.lo))) << "L"
                << fmt(v.sx(rat_d(s.at))) << " " << fmt(v.sy(rat_d(s.hi)));
        else
            out << "M" << fmt(v.sx(rat_d(s.lo))) << " " << fmt(v.sy(rat_d(s.at))) << "L"
                << fmt(v.sx(rat_d(s.hi))) << " " << fmt(v.sy(rat_d(s.at)));
    }
    out << "\"/>\n";
}

std::string document(const Viewport& v, const std::string& content) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(v.width)
        << "\" height=\"" << fmt(v.height) << "\" viewBox=\"0 0 " << fmt(v.width) << " "
        << fmt(v.height) << "\">\n"
        << content << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_body_svg(const Body& b) {
    if (b.region.empty()) {
        Viewport v;
        v.width = 800;
        v.height = 600;
        return document(v, "");
    }
    Rect world = b.region.bbox();
    for (const auto& [name, piece] : b.pieces) {
        if (piece.empty()) continue;
        const Rect pb = piece.bbox();
        world.x0 = rat_min(world.x0, pb.x0);
        world.x1 = rat_max(world.x1, pb.x1);
        world.y0 = rat_min(world.y0, pb.y0);
        world.y1 = rat_max(world.y1, pb.y1);
    }
    const Viewport v = fit_viewport(world);
    std::ostringstream content;
    for (const auto& [name, piece] : b.pieces)  // map order: deterministic
        stroke_region(content, v, piece, "#999999", 1.0);
    stroke_region(content, v, b.region, "#000000", 2.5);
    return document(v, content.str());
}

std::string render_window_svg(const PackingWindow& w) {
    if (w.placements.empty() && w.window.empty()) {
        Viewport v;
        return document(v, "");
    }
    const RectRegion all = w.window.empty() ? union_of_copies(w) : w.window;
    const Viewport v = fit_viewport(all.bbox());
    std::ostringstream content;
    stroke_region(content, v, w.window, "#bbbbbb", 0.6);
    for (const auto& g : w.placements)
        stroke_region(content, v, transform(w.body.region, g), "#000000", 1.4);
    return document(v, content.str());
}

}  // namespace hypack
