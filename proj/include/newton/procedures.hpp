#pragma once

#include <optional>
#include <string>
#include <vector>

#include "newton/diagram.hpp"
#include "newton/eea.hpp"

namespace newton {

// Anchors a descent run inside a fixed ambient triangle.  `top` and `bottom`
// are the axis endpoints shared by every diagram in the run; `wrap0` is the
// number of wrap corners already consumed when this line starts acting.
struct Frame {
    LatticePoint top;
    LatticePoint bottom;
    Int wrap0 = 0;
};

// One elementary deformation: `added_points` thrown under `base` yields
// `result`.  `nu_predicted` is the closed-form value, `nu_computed` the
// kernel recomputation; construction fails if they disagree.
struct DeformationStep {
    Int stage = 0;
    std::string label;
    std::vector<LatticePoint> added_points;
    Diagram base;
    Diagram result;
    Int nu_predicted = 0;
    Int nu_computed = 0;
    bool duplicate = false;
};

// Chord points of one level together with their unit offsets.
struct NotchPoints {
    std::vector<LatticePoint> on_chord;
    std::vector<LatticePoint> offset;
};

struct StageInfo {
    Int stage = 0;
    Int p = 0;
    Int q = 0;
    Int sign = 0;
    Int wrap_count = 0;
    std::string route;
    Int origin_nu = 0;
};

// Final diagrams of a complete run are a triangle with one extra vertex:
// `steep_count` unit steps of slope -(shallow_slope+1), then `shallow_count`
// unit steps of slope -shallow_slope.
struct FinalShape {
    Int steep_count = 0;
    Int shallow_count = 0;
    Int shallow_slope = 0;
};

struct JumpSequence {
    Diagram origin;
    Int origin_nu = 0;
    std::vector<DeformationStep> steps;
    std::vector<Int> values; // distinct attained values, descending
    std::vector<Int> jumps;  // successive differences of `values`
    std::vector<StageInfo> stages;
    Diagram final_diagram;
    std::optional<FinalShape> final_shape;
};

// Wrap diagram: the frame corners plus the wrap corner after j extra wraps.
Diagram wrap_diagram(const EeaLine &line, Int j, const Frame &frame);

// Level base: the wrap diagram cut down k times along the (j+1)-st chord
// direction.  k ranges over 0..n; k == n is the floor of the wrap.
Diagram notch_diagram(const EeaLine &line, Int j, Int k, const Frame &frame);

// The deformation points available at level (j, k): n-k points on the open
// chord and their n-k unit offsets.
NotchPoints notch_points(const EeaLine &line, Int j, Int k, const Frame &frame);

// Bridge diagram: the wrap origin plus the junction point where the derived
// line with multiplier n-1 meets the frame.  Needs a fourth table row.
Diagram bridge_diagram(const EeaLine &line, const Frame &frame);

// All steps of wrap index j: chords then offsets for k = 0..n-1.
std::vector<DeformationStep> descend_level(const EeaLine &line, Int j,
                                           const Frame &frame);

// Full run of a line: every admissible wrap index in order.
std::vector<DeformationStep> descend_sweep(const EeaLine &line,
                                           const Frame &frame);

// Edge descents for the two degenerate table shapes (unit head entry).
std::vector<DeformationStep> descend_upper_edge(const EeaLine &line,
                                                const Frame &frame);
std::vector<DeformationStep> descend_lower_edge(const EeaLine &line,
                                                const Frame &frame);

// The whole constructive sequence for the pair (a0, b0): every value from
// nu of the segment diagram down to nu - r(a0-r) is attained by some step.
JumpSequence unit_jump_sequence(Int a0, Int b0);

// Parse a three-vertex terminal diagram into its shape parameters.
std::optional<FinalShape> classify_final(const Diagram &d);

} // namespace newton
