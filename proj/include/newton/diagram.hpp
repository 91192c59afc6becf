#pragma once

#include <compare>
#include <vector>

#include "newton/arith.hpp"

namespace newton {

struct LatticePoint {
    Int x = 0;
    Int y = 0;
    LatticePoint() = default;
    LatticePoint(Int px, Int py) : x(px), y(py) {
        if (x < 0 || y < 0)
            throw DomainError("lattice point with a negative coordinate");
    }
    auto operator<=>(const LatticePoint &) const = default;
};

// cross product of the vectors (ax,ay) and (bx,by)
inline Int cross(Int ax, Int ay, Int bx, Int by) {
    return checked_sub(checked_mul(ax, by), checked_mul(ay, bx));
}

inline Int cross(const LatticePoint &o, const LatticePoint &a, const LatticePoint &b) {
    return cross(checked_sub(a.x, o.x), checked_sub(a.y, o.y),
                 checked_sub(b.x, o.x), checked_sub(b.y, o.y));
}

// Convex lattice staircase: the compact border of a Newton region, stored
// top-left to bottom-right.  x strictly increases, y strictly decreases and
// consecutive edge slopes strictly flatten (no collinear triples).  A single
// vertex is allowed as a degenerate diagram; the nu_* operations reject it.
class Diagram {
  public:
    Diagram() = default; // empty placeholder; any operation on it throws
    explicit Diagram(std::vector<LatticePoint> vertices);
    const std::vector<LatticePoint> &vertices() const { return verts_; }
    const LatticePoint &top() const { return verts_.front(); }
    const LatticePoint &bottom() const { return verts_.back(); }
    std::size_t size() const { return verts_.size(); }
    bool operator==(const Diagram &) const = default;

  private:
    std::vector<LatticePoint> verts_;
};

// one slope piece: edge vector (width, -height) when walked downward
struct Segment {
    Int width;
    Int height;
    Segment(Int w, Int h) : width(w), height(h) {
        if (w < 1 || h < 1)
            throw DomainError("segment sides must be positive");
    }
    bool operator==(const Segment &) const = default;
};

struct ChainPart {
    Int mult;
    Segment seg;
};

// sign -1: parts are listed top to bottom; sign +1: bottom to top.
struct SignedChainSpec {
    Int sign;
    std::vector<ChainPart> parts;
};

// smallest diagram whose region contains every input point
Diagram diagram_from_points(std::vector<LatticePoint> points);

// walk the chain parts from the top anchor; equal-slope neighbours merge
Diagram realize_chain(const LatticePoint &anchor_top, const SignedChainSpec &spec);

// the single-edge diagram from (0,q) to (p,0)
Diagram segment_diagram(Int p, Int q);

// Newton number 2A - p - q + 1 for a diagram touching both axes
Int nu_axes(const Diagram &d);

// Newton number of a diagram within lattice distance 1 of each axis,
// via axis padding grown until the value stabilises
Int nu_general(const Diagram &d);

Diagram deform(const Diagram &d, const std::vector<LatticePoint> &pts);

// pt lies in the closed region on or above d
bool contains(const Diagram &d, const LatticePoint &pt);

// every point of g's region is in s's region (s is the lower diagram)
bool lies_below(const Diagram &s, const Diagram &g);

// twice the area enclosed between two diagrams sharing both endpoints
Int twice_area_between(const Diagram &s, const Diagram &g);

struct PickData {
    Int twice_area;
    Int boundary;
    Int interior;
};

// shoelace area with boundary count by edge gcd and interior count by Pick
PickData pick_area(const std::vector<LatticePoint> &polygon, bool allow_degenerate = false);

struct LatticeCount {
    Int boundary;
    Int interior;
};

// direct enumeration over the bounding box; the test oracle for pick_area
LatticeCount lattice_count(const std::vector<LatticePoint> &polygon);

} // namespace newton
