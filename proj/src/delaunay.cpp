#include "forbid/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "forbid/errors.hpp"

namespace forbid {

namespace {

double orient(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Directions of the three bounding vertices, counter-clockwise. They are kept
// symbolic, infinitely far away, so they never cut into the hull of the input.
constexpr std::array<Point, 3> kFar{{{-2.0, -1.0}, {2.0, -1.0}, {0.0, 2.0}}};

Point circumcenter(Point a, Point b, Point c) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, c2 = c.x * c.x + c.y * c.y;
    return {(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
            (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
}

struct Tri {
    std::array<std::size_t, 3> v;
};

class Builder {
public:
    explicit Builder(const std::vector<Point>& pts) : pts_(pts), n_(pts.size()) {}

    bool far(std::size_t v) const { return v >= n_; }

    // Whether q lies strictly inside the circumcircle of t, taking the far
    // vertices to infinity. One far vertex: the circle becomes the open half
    // plane left of the finite edge (plus the open edge itself). Two: the half
    // plane through the finite vertex facing the limiting circle center.
    bool conflicts(const Tri& t, Point q) const {
        const int nfar = far(t.v[0]) + far(t.v[1]) + far(t.v[2]);
        if (nfar == 0) return in_circle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], q) > 0.0;
        if (nfar == 3) return true;
        // Rotate so the finite vertices come first; rotation keeps the orientation.
        std::array<std::size_t, 3> v = t.v;
        while (far(v[0]) || (nfar == 1 && far(v[1]))) std::rotate(v.begin(), v.begin() + 1, v.end());
        if (nfar == 1) {
            const Point a = pts_[v[0]], b = pts_[v[1]];
            const double o = orient(a, b, q);
            if (o != 0.0) return o > 0.0;
            const double t_along = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
            const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
            return t_along > 0.0 && t_along < len2;
        }
        const Point a = pts_[v[0]];
        const Point c = circumcenter({0.0, 0.0}, kFar[v[1] - n_], kFar[v[2] - n_]);
        return (q.x - a.x) * c.x + (q.y - a.y) * c.y > 0.0;
    }

    Triangulation run() {
        std::vector<Tri> tris{{{n_, n_ + 1, n_ + 2}}};
        std::vector<Tri> keep;
        std::map<std::pair<std::size_t, std::size_t>, int> undirected;
        std::vector<std::pair<std::size_t, std::size_t>> directed;

        for (std::size_t p = 0; p < n_; ++p) {
            const Point q = pts_[p];
            undirected.clear();
            directed.clear();
            keep.clear();
            for (const auto& t : tris) {
                if (!conflicts(t, q)) {
                    keep.push_back(t);
                    continue;
                }
                for (int e = 0; e < 3; ++e) {
                    const std::size_t a = t.v[e], b = t.v[(e + 1) % 3];
                    directed.emplace_back(a, b);
                    ++undirected[{std::min(a, b), std::max(a, b)}];
                }
            }
            if (directed.empty()) continue;  // duplicate of an inserted point
            // Cavity boundary edges keep their counter-clockwise direction, so
            // (a, b, p) is counter-clockwise as well.
            for (const auto& [a, b] : directed)
                if (undirected[{std::min(a, b), std::max(a, b)}] == 1) keep.push_back({{a, b, p}});
            tris.swap(keep);
        }

        Triangulation out;
        for (const auto& t : tris) {
            if (far(t.v[0]) || far(t.v[1]) || far(t.v[2])) continue;
            out.triangles.push_back(t.v);
            for (int e = 0; e < 3; ++e) {
                const std::size_t a = t.v[e], b = t.v[(e + 1) % 3];
                out.edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        std::sort(out.edges.begin(), out.edges.end());
        out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
        return out;
    }

private:
    const std::vector<Point>& pts_;
    std::size_t n_;
};

}  // namespace

double in_circle(Point a, Point b, Point c, Point d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

Triangulation delaunay(const std::vector<Point>& points) {
    if (points.size() < 3) throw InputError("degenerate triangulation: fewer than three points");
    Triangulation out = Builder(points).run();
    if (out.triangles.empty()) throw InputError("degenerate triangulation: points are collinear");
    return out;
}

}  // namespace forbid
