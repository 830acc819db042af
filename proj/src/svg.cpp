#include "forbid/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string_view>
#include <vector>

namespace forbid {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Layout& layout, const OverlapSet& overlaps) {
    std::vector<bool> overlapped(layout.size(), false);
    for (const auto& [i, j] : overlaps) {
        overlapped[i] = true;
        overlapped[j] = true;
    }

    Box box = layout.empty() ? Box{0, 0, 1, 1} : bounding_box(layout, true);
    const double mx = 0.02 * std::max(box.width(), 1e-9);
    const double my = 0.02 * std::max(box.height(), 1e-9);
    box.min_x -= mx;
    box.max_x += mx;
    box.min_y -= my;
    box.max_y += my;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(box.min_x) + ' ' +
           num(box.min_y) + ' ' + num(box.width()) + ' ' + num(box.height()) + "\">\n";

    if (!layout.edges.empty()) {
        const double stroke = 0.002 * std::max(box.width(), box.height());
        out += "<g class=\"edges\" stroke-width=\"" + num(stroke) + "\">\n";
        for (const auto& e : layout.edges) {
            const Point a = layout.nodes[e.source].center;
            const Point b = layout.nodes[e.target].center;
            out += "<line class=\"edge\" stroke=\"#999999\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
                   "\" y2=\"" + num(b.y) + "\"/>\n";
        }
        out += "</g>\n";
    }

    out += "<g class=\"nodes\">\n";
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const NodeBox& n = layout.nodes[i];
        const bool red = overlapped[i];
        out += "<rect class=\"" + std::string(red ? "overlap" : "free") + "\" fill=\"" +
               (red ? "#ff0000\" fill-opacity=\"0.5" : "#0000ff\" fill-opacity=\"1") + "\" x=\"" +
               num(n.center.x - 0.5 * n.width) + "\" y=\"" + num(n.center.y - 0.5 * n.height) + "\" width=\"" +
               num(n.width) + "\" height=\"" + num(n.height) + "\"><title>" + xml_escape(n.id) +
               "</title></rect>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace forbid
