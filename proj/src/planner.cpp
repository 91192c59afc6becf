#include "newton/planner.hpp"

#include <algorithm>
#include <numeric>

namespace newton {

namespace {

void require_pair(Int p, Int q) {
    if (p < 2)
        throw DomainError("first entry must exceed 1");
    if (q <= p)
        throw DomainError("second entry must exceed the first");
    if (std::gcd(p, q) != 1)
        throw DomainError("entries must be coprime");
}

Int threshold_for(Int p) { return (p - 1) * (p - 2) + 1; }

ChainStep step_of(Int p, Int q) {
    const Int r = q % p;
    const Int mu = (p - 1) * (q - 1);
    return ChainStep{p, q, r, mu, mu - r * (p - r)};
}

struct Search {
    Int threshold = 0;
    Int max_len = 0;
    Int budget = 200000;
    std::vector<ChainStep> cur, best;
    Int best_floor = 0;
    Int full_floor = 0;
    bool have_best = false;

    void note_leaf(Int fc) {
        if (!have_best || cur.size() > best.size() ||
            (cur.size() == best.size() && fc < best_floor)) {
            best = cur;
            best_floor = fc;
            have_best = true;
        }
    }

    bool dfs(Int pc, Int qc, Int fc) {
        if (fc <= 1 || fc < threshold) {
            best = cur;
            full_floor = fc;
            have_best = true;
            return true;
        }
        if (static_cast<Int>(cur.size()) >= max_len || --budget <= 0) {
            note_leaf(fc);
            return false;
        }
        std::vector<ChainStep> cand;
        for (Int pp = 2; pp <= pc; ++pp)
            for (Int qq = pp + 1; qq <= qc; ++qq) {
                if ((pp == pc && qq == qc) || std::gcd(pp, qq) != 1)
                    continue;
                const ChainStep s = step_of(pp, qq);
                if (s.mu >= fc && s.covered_low < fc)
                    cand.push_back(s);
            }
        if (cand.empty()) {
            note_leaf(fc);
            return false;
        }
        std::sort(cand.begin(), cand.end(),
                  [](const ChainStep &x, const ChainStep &y) {
                      if (x.covered_low != y.covered_low)
                          return x.covered_low < y.covered_low;
                      if (x.q != y.q)
                          return x.q > y.q;
                      return x.p > y.p;
                  });
        for (const ChainStep &s : cand) {
            cur.push_back(s);
            if (dfs(s.p, s.q, s.covered_low))
                return true;
            cur.pop_back();
        }
        return false;
    }
};

} // namespace

ChainStep make_step(Int p, Int q) {
    require_pair(p, q);
    return step_of(p, q);
}

ChainReport validate_chain(Int p0, Int q0,
                           const std::vector<ChainStep> &steps) {
    ChainReport rep;
    try {
        require_pair(p0, q0);
    } catch (const DomainError &e) {
        rep.error = e.what();
        rep.failing_index = 0;
        return rep;
    }
    ChainStep prev = step_of(p0, q0);
    rep.high = prev.mu;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const ChainStep &s = steps[i];
        rep.failing_index = static_cast<Int>(i);
        try {
            require_pair(s.p, s.q);
        } catch (const DomainError &e) {
            rep.error = e.what();
            return rep;
        }
        if (s.p == prev.p && s.q == prev.q) {
            rep.error = "chain repeats a pair";
            return rep;
        }
        if (s.p > prev.p || s.q > prev.q) {
            rep.error = "chain pairs must not increase";
            return rep;
        }
        const ChainStep fresh = step_of(s.p, s.q);
        if (!(fresh == s)) {
            rep.error = "step fields are inconsistent";
            return rep;
        }
        if (prev.covered_low > s.mu) {
            rep.error = "coverage gap between steps";
            return rep;
        }
        prev = s;
    }
    rep.ok = true;
    rep.failing_index = -1;
    rep.low = prev.covered_low;
    return rep;
}

bool check_full_coverage(ChainPlan &plan, Int p) {
    const ChainReport rep = validate_chain(plan.p0, plan.q0, plan.steps);
    if (!rep.ok)
        throw DomainError(rep.error);
    plan.terminal.reset();
    if (rep.low <= 1) {
        plan.full_coverage = true;
    } else if (rep.low < threshold_for(p)) {
        plan.full_coverage = true;
        plan.terminal = TerminalRule{p, threshold_for(p)};
    } else {
        plan.full_coverage = false;
    }
    return plan.full_coverage;
}

ChainPlan make_plan(Int p0, Int q0,
                    const std::vector<std::pair<Int, Int>> &pairs) {
    ChainPlan plan;
    plan.p0 = p0;
    plan.q0 = q0;
    for (const auto &[p, q] : pairs)
        plan.steps.push_back(make_step(p, q));
    check_full_coverage(plan, p0);
    return plan;
}

std::optional<ChainPlan> search_chain(Int p, Int q, Int max_len) {
    require_pair(p, q);
    if (max_len < 0)
        throw DomainError("chain length limit must be nonnegative");
    Search s;
    s.threshold = threshold_for(p);
    s.max_len = max_len;
    const ChainStep start = step_of(p, q);
    const bool full = s.dfs(p, q, start.covered_low);
    if (!full && (!s.have_best || s.best.empty()))
        return std::nullopt;

    ChainPlan plan;
    plan.p0 = p;
    plan.q0 = q;
    plan.steps = s.best;
    plan.full_coverage = full;
    if (full && s.full_floor > 1)
        plan.terminal = TerminalRule{p, s.threshold};
    return plan;
}

} // namespace newton
