#include "newton/oracle.hpp"

#include <algorithm>
#include <set>

#include "newton/procedures.hpp"

namespace newton {

namespace {

bool on_staircase(const Diagram &d, const LatticePoint &pt) {
    const auto &v = d.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (pt.x < v[i].x || pt.x > v[i + 1].x)
            continue;
        if (cross(v[i], v[i + 1], pt) == 0)
            return true;
    }
    return v.size() == 1 && pt == v[0];
}

struct Search {
    const Diagram &target;
    Int floor;
    std::vector<LatticePoint> pool;
    std::set<Int> found;
    std::map<Int, Diagram> witness;

    void complete(const std::vector<LatticePoint> &chain) {
        Diagram cand(chain);
        for (const auto &v : target.vertices())
            if (!contains(cand, v))
                return;
        const Int nu = nu_axes(cand);
        if (nu < std::max<Int>(1, floor))
            return;
        if (found.insert(nu).second)
            witness.emplace(nu, std::move(cand));
    }

    void extend(std::vector<LatticePoint> &chain, std::size_t from) {
        const LatticePoint last = chain.back();
        if (last.y == 0) {
            complete(chain);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            const LatticePoint &c = pool[i];
            if (c.x <= last.x || c.y >= last.y)
                continue;
            if (chain.size() >= 2 &&
                cross(chain[chain.size() - 2], last, c) <= 0)
                continue;
            chain.push_back(c);
            extend(chain, i + 1);
            chain.pop_back();
        }
    }
};

} // namespace

AttainableSet enumerate_attainable(const Diagram &d, Int floor, Int cap) {
    if (d.size() < 2 || d.top().x != 0 || d.bottom().y != 0)
        throw DomainError("search needs a diagram touching both axes");

    Search s{d, floor, {}, {}, {}};
    for (Int x = 0; x <= d.bottom().x; ++x)
        for (Int y = d.top().y; y >= 0; --y) {
            const LatticePoint pt{x, y};
            if (contains(d, pt) && !on_staircase(d, pt))
                continue;
            if (pt == LatticePoint{0, 0} || pt == LatticePoint{1, 0} ||
                pt == LatticePoint{0, 1})
                continue;
            s.pool.push_back(pt);
        }
    if (static_cast<Int>(s.pool.size()) > cap)
        throw DomainError("candidate pool exceeds the search cap");

    std::vector<LatticePoint> chain;
    for (std::size_t i = 0; i < s.pool.size(); ++i) {
        if (s.pool[i].x != 0)
            break;
        chain.push_back(s.pool[i]);
        s.extend(chain, i + 1);
        chain.pop_back();
    }

    AttainableSet out;
    out.origin = d;
    out.values.assign(s.found.rbegin(), s.found.rend());
    out.witness = std::move(s.witness);
    return out;
}

TheoremReport verify_theorem(Int p, Int q, std::optional<Int> floor_override) {
    const JumpSequence seq = unit_jump_sequence(p, q);
    TheoremReport rep;
    rep.p = p;
    rep.q = q;
    rep.r = q % p;
    rep.origin_nu = seq.origin_nu;
    const Int theorem_floor = rep.origin_nu - rep.r * (p - rep.r);
    rep.expected_unit_jumps = rep.origin_nu - std::max<Int>(1, theorem_floor);
    const Int floor = floor_override.value_or(theorem_floor);

    const AttainableSet att = enumerate_attainable(seq.origin, floor);
    rep.oracle_values = att.values;
    rep.procedure_values = seq.values;

    rep.unit_jumps_ok =
        static_cast<Int>(att.values.size()) >= rep.expected_unit_jumps + 1;
    for (Int i = 0; rep.unit_jumps_ok && i <= rep.expected_unit_jumps; ++i)
        if (att.values[i] != rep.origin_nu - i)
            rep.unit_jumps_ok = false;

    const std::set<Int> oracle_set(att.values.begin(), att.values.end());
    rep.subset_ok = true;
    for (Int v : seq.values)
        if (!oracle_set.count(v))
            rep.subset_ok = false;
    return rep;
}

} // namespace newton
