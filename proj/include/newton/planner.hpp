#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "newton/arith.hpp"

namespace newton {

// One pair in a coverage chain.  Its run attains every value in
// [covered_low, mu]; mu = (p-1)(q-1) and covered_low = mu - r(p-r).
struct ChainStep {
    Int p = 0;
    Int q = 0;
    Int r = 0;
    Int mu = 0;
    Int covered_low = 0;
    bool operator==(const ChainStep &) const = default;
};

// Values below `threshold` = (degree-1)(degree-2)+1 need no further chain
// steps: they are reached inside the degree-`degree` family directly.
struct TerminalRule {
    Int degree = 0;
    Int threshold = 0;
    bool operator==(const TerminalRule &) const = default;
};

struct ChainPlan {
    Int p0 = 0;
    Int q0 = 0;
    std::vector<ChainStep> steps;
    bool full_coverage = false;
    std::optional<TerminalRule> terminal;
};

struct ChainReport {
    bool ok = false;
    std::string error;
    Int failing_index = -1;
    Int low = 0;  // lowest value the chain covers
    Int high = 0; // highest value (the starting pair's mu)
};

ChainStep make_step(Int p, Int q);

// Builds a plan from explicit pairs and stamps its coverage verdict.
// Throws when the pairs do not form a valid chain.
ChainPlan make_plan(Int p0, Int q0,
                    const std::vector<std::pair<Int, Int>> &pairs);

// Checks chain shape: valid descending coprime pairs, consistent fields,
// and no coverage gap between consecutive intervals.
ChainReport validate_chain(Int p0, Int q0,
                           const std::vector<ChainStep> &steps);

// Stamps `full_coverage` and `terminal` on the plan, using the terminal
// rule for degree p.  Throws when the plan's chain is invalid.
bool check_full_coverage(ChainPlan &plan, Int p);

// Depth-first search for a chain establishing full coverage below (p, q).
// Returns the first full plan found, otherwise the deepest partial plan,
// otherwise nothing.
std::optional<ChainPlan> search_chain(Int p, Int q, Int max_len = 64);

} // namespace newton
