#include "newton/diagram.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace newton {

namespace {

int sgn(Int v) { return (v > 0) - (v < 0); }

// signed double area contribution of the chain walk (negative for a
// top-left to bottom-right walk)
Int chain_shoelace(const std::vector<LatticePoint> &verts) {
    Int f = 0;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        f = checked_add(f, cross(verts[i].x, verts[i].y, verts[i + 1].x, verts[i + 1].y));
    return f;
}

} // namespace

Diagram::Diagram(std::vector<LatticePoint> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty())
        throw DomainError("diagram needs at least one vertex");
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i) {
        if (verts_[i + 1].x <= verts_[i].x || verts_[i + 1].y >= verts_[i].y)
            throw DomainError("diagram vertices must descend left to right");
    }
    for (std::size_t i = 0; i + 2 < verts_.size(); ++i) {
        if (cross(verts_[i], verts_[i + 1], verts_[i + 2]) <= 0)
            throw DomainError("diagram vertices must be strictly convex");
    }
}

Diagram diagram_from_points(std::vector<LatticePoint> points) {
    if (points.empty())
        throw DomainError("no support points");
    std::sort(points.begin(), points.end(),
              [](const LatticePoint &a, const LatticePoint &b) {
                  return a.x != b.x ? a.x < b.x : a.y < b.y;
              });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // keep the dominance-minimal staircase points
    std::vector<LatticePoint> frontier;
    Int best_y = std::numeric_limits<Int>::max();
    for (const auto &p : points) {
        if (p.y < best_y) {
            frontier.push_back(p);
            best_y = p.y;
        }
    }

    // lower convex chain over the frontier (x ascending, y descending)
    std::vector<LatticePoint> hull;
    for (const auto &p : frontier) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    return Diagram(std::move(hull));
}

Diagram realize_chain(const LatticePoint &anchor_top, const SignedChainSpec &spec) {
    if (spec.sign != 1 && spec.sign != -1)
        throw DomainError("chain sign must be +1 or -1");
    if (spec.parts.empty())
        throw DomainError("chain needs at least one part");
    std::vector<ChainPart> parts = spec.parts;
    if (spec.sign == 1)
        std::reverse(parts.begin(), parts.end());

    for (const auto &part : parts)
        if (part.mult < 1)
            throw DomainError("chain part multiplier must be positive");

    // merge equal slopes, then walk downward from the anchor
    std::vector<std::pair<Int, Int>> edges; // (dx, dy-magnitude)
    for (const auto &part : parts) {
        Int w = checked_mul(part.mult, part.seg.width);
        Int h = checked_mul(part.mult, part.seg.height);
        if (!edges.empty() &&
            cross(edges.back().first, edges.back().second, w, h) == 0) {
            edges.back().first = checked_add(edges.back().first, w);
            edges.back().second = checked_add(edges.back().second, h);
        } else {
            edges.emplace_back(w, h);
        }
    }

    std::vector<LatticePoint> verts{anchor_top};
    for (const auto &[w, h] : edges) {
        const auto &last = verts.back();
        verts.emplace_back(checked_add(last.x, w), checked_sub(last.y, h));
    }
    for (std::size_t i = 0; i + 2 < verts.size(); ++i) {
        if (cross(verts[i], verts[i + 1], verts[i + 2]) <= 0)
            throw DomainError("not a Newton diagram: chain slopes must strictly flatten");
    }
    return Diagram(std::move(verts));
}

Diagram segment_diagram(Int p, Int q) {
    if (p < 1 || q < 1)
        throw DomainError("segment diagram needs positive intercepts");
    return Diagram({LatticePoint(0, q), LatticePoint(p, 0)});
}

Int nu_axes(const Diagram &d) {
    if (d.size() < 2)
        throw DomainError("degenerate diagram has no Newton number");
    if (d.top().x != 0 || d.bottom().y != 0)
        throw DomainError("diagram must touch both axes");
    Int twice_area = checked_sub(Int{0}, chain_shoelace(d.vertices()));
    Int v = checked_sub(checked_sub(twice_area, d.bottom().x), d.top().y);
    return checked_add(v, 1);
}

Int nu_general(const Diagram &d) {
    if (d.top().x > 1 || d.bottom().y > 1)
        throw DomainError("diagram is farther than 1 from an axis");
    if (d.top().x == 0 && d.bottom().y == 0)
        return nu_axes(d);

    Int max_x = d.bottom().x;
    Int max_y = d.top().y;
    auto padded = [&](Int inc) {
        std::vector<LatticePoint> pts = d.vertices();
        pts.emplace_back(Int{0}, checked_add(max_y, inc));
        pts.emplace_back(checked_add(max_x, inc), Int{0});
        return nu_axes(diagram_from_points(std::move(pts)));
    };

    Int inc = 1;
    Int prev = padded(inc);
    for (int iter = 1; iter < 16; ++iter) {
        inc = checked_mul(inc, 2);
        Int cur = padded(inc);
        if (cur == prev)
            return cur;
        prev = cur;
    }
    throw DomainError("axis padding did not stabilise");
}

Diagram deform(const Diagram &d, const std::vector<LatticePoint> &pts) {
    std::vector<LatticePoint> all = d.vertices();
    all.insert(all.end(), pts.begin(), pts.end());
    return diagram_from_points(std::move(all));
}

bool contains(const Diagram &d, const LatticePoint &pt) {
    if (pt.x < d.top().x || pt.y < d.bottom().y)
        return false;
    const auto &v = d.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (cross(v[i], v[i + 1], pt) < 0)
            return false;
    return true;
}

bool lies_below(const Diagram &s, const Diagram &g) {
    for (const auto &pt : g.vertices())
        if (!contains(s, pt))
            return false;
    return true;
}

Int twice_area_between(const Diagram &s, const Diagram &g) {
    if (s.top() != g.top() || s.bottom() != g.bottom())
        throw DomainError("diagrams must share both endpoints");
    if (!lies_below(s, g))
        throw DomainError("first diagram must lie below the second");
    Int v = checked_sub(chain_shoelace(s.vertices()), chain_shoelace(g.vertices()));
    if (v < 0)
        throw DomainError("negative area between diagrams");
    return v;
}

namespace {

bool on_segment(const LatticePoint &a, const LatticePoint &b, const LatticePoint &p) {
    if (cross(a, b, p) != 0)
        return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(const LatticePoint &a, const LatticePoint &b,
                    const LatticePoint &c, const LatticePoint &d) {
    int d1 = sgn(cross(a, b, c));
    int d2 = sgn(cross(a, b, d));
    int d3 = sgn(cross(c, d, a));
    int d4 = sgn(cross(c, d, b));
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return true;
    return (d1 == 0 && on_segment(a, b, c)) || (d2 == 0 && on_segment(a, b, d)) ||
           (d3 == 0 && on_segment(c, d, a)) || (d4 == 0 && on_segment(c, d, b));
}

std::vector<LatticePoint> clean_polygon(const std::vector<LatticePoint> &polygon) {
    std::vector<LatticePoint> pts;
    for (const auto &p : polygon)
        if (pts.empty() || !(p == pts.back()))
            pts.push_back(p);
    if (pts.size() >= 2 && pts.front() == pts.back())
        pts.pop_back();
    return pts;
}

// every non-adjacent edge pair must be disjoint; adjacent edges may share
// only their common vertex
void require_simple(const std::vector<LatticePoint> &pts) {
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto &a = pts[i];
        const auto &b = pts[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto &c = pts[j];
            const auto &d = pts[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                const LatticePoint &shared = (j == i + 1) ? b : a;
                const LatticePoint &tip1 = (j == i + 1) ? a : b;
                const LatticePoint &tip2 = (j == i + 1) ? d : c;
                if (cross(shared, tip1, tip2) == 0 &&
                    checked_add(checked_mul(checked_sub(tip1.x, shared.x),
                                            checked_sub(tip2.x, shared.x)),
                                checked_mul(checked_sub(tip1.y, shared.y),
                                            checked_sub(tip2.y, shared.y))) > 0)
                    throw DomainError("polygon is not simple");
                continue;
            }
            if (segments_touch(a, b, c, d))
                throw DomainError("polygon is not simple");
        }
    }
}

Int polygon_shoelace(const std::vector<LatticePoint> &pts) {
    Int s = 0;
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto &a = pts[i];
        const auto &b = pts[(i + 1) % n];
        s = checked_add(s, cross(a.x, a.y, b.x, b.y));
    }
    return s;
}

Int boundary_points(const std::vector<LatticePoint> &pts) {
    Int b = 0;
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto &a = pts[i];
        const auto &c = pts[(i + 1) % n];
        Int dx = checked_sub(c.x, a.x);
        Int dy = checked_sub(c.y, a.y);
        b = checked_add(b, std::gcd(dx, dy));
    }
    return b;
}

} // namespace

PickData pick_area(const std::vector<LatticePoint> &polygon, bool allow_degenerate) {
    std::vector<LatticePoint> pts = clean_polygon(polygon);
    if (pts.empty())
        throw DomainError("empty polygon");

    if (pts.size() < 3 || polygon_shoelace(pts) == 0) {
        if (!allow_degenerate)
            throw DomainError("degenerate polygon");
        // flat path: count the distinct lattice points on it
        std::vector<LatticePoint> on_path;
        std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto &a = pts[i];
            const auto &c = pts[(i + 1) % n];
            Int dx = checked_sub(c.x, a.x);
            Int dy = checked_sub(c.y, a.y);
            Int g = std::gcd(dx, dy);
            on_path.push_back(a);
            for (Int t = 1; t < g; ++t)
                on_path.emplace_back(checked_add(a.x, dx / g * t),
                                     checked_add(a.y, dy / g * t));
        }
        std::sort(on_path.begin(), on_path.end());
        on_path.erase(std::unique(on_path.begin(), on_path.end()), on_path.end());
        return {0, static_cast<Int>(on_path.size()), 0};
    }

    require_simple(pts);
    Int twice_area = polygon_shoelace(pts);
    if (twice_area < 0)
        twice_area = checked_sub(Int{0}, twice_area);
    Int b = boundary_points(pts);
    Int w2 = checked_add(checked_sub(twice_area, b), 2);
    if (w2 < 0 || w2 % 2 != 0)
        throw DomainError("Pick identity failed; polygon is not simple");
    return {twice_area, b, w2 / 2};
}

LatticeCount lattice_count(const std::vector<LatticePoint> &polygon) {
    std::vector<LatticePoint> pts = clean_polygon(polygon);
    if (pts.size() < 3 || polygon_shoelace(pts) == 0)
        throw DomainError("degenerate polygon");
    require_simple(pts);

    Int min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const auto &p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }

    std::size_t n = pts.size();
    LatticeCount out{0, 0};
    for (Int x = min_x; x <= max_x; ++x) {
        for (Int y = min_y; y <= max_y; ++y) {
            LatticePoint p(x, y);
            bool boundary = false;
            for (std::size_t i = 0; i < n && !boundary; ++i)
                boundary = on_segment(pts[i], pts[(i + 1) % n], p);
            if (boundary) {
                out.boundary = checked_add(out.boundary, 1);
                continue;
            }
            // even-odd crossing count against a horizontal ray
            bool inside = false;
            for (std::size_t i = 0; i < n; ++i) {
                const auto &a = pts[i];
                const auto &b = pts[(i + 1) % n];
                if ((a.y > p.y) == (b.y > p.y))
                    continue;
                Int det = cross(a, b, p);
                if ((det > 0) == (b.y > a.y))
                    inside = !inside;
            }
            if (inside)
                out.interior = checked_add(out.interior, 1);
        }
    }
    return out;
}

} // namespace newton
