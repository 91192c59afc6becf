#pragma once

#include <map>
#include <optional>
#include <vector>

#include "newton/diagram.hpp"

namespace newton {

// Every Newton number reachable from `origin` by deformation, found by
// exhaustive search, together with one witness diagram per value.
struct AttainableSet {
    Diagram origin;
    std::vector<Int> values; // descending
    std::map<Int, Diagram> witness;
};

// Enumerates all convex staircases through the candidate pool (lattice
// points of the bounding box not strictly above d) that keep every vertex
// of d on or above them, recording values >= floor.  The pool is capped to
// keep the search honest about its cost.
AttainableSet enumerate_attainable(const Diagram &d, Int floor, Int cap = 40);

struct TheoremReport {
    Int p = 0;
    Int q = 0;
    Int r = 0;
    Int origin_nu = 0;
    Int expected_unit_jumps = 0;
    std::vector<Int> oracle_values;    // descending
    std::vector<Int> procedure_values; // descending
    bool unit_jumps_ok = false;
    bool subset_ok = false;
};

// Cross-checks the constructive run for (p, q) against the exhaustive
// search: the attainable values down to the floor must form an unbroken
// range, and every constructed value must be attainable.  The search floor
// defaults to nu - r(p-r) and may be overridden.
TheoremReport verify_theorem(Int p, Int q,
                             std::optional<Int> floor_override = std::nullopt);

} // namespace newton
