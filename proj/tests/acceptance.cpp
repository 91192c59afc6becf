// Acceptance gate: one timed line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "newton/cli.hpp"
#include "newton/diagram.hpp"
#include "newton/eea.hpp"
#include "newton/oracle.hpp"
#include "newton/planner.hpp"
#include "newton/procedures.hpp"

using namespace newton;

namespace {

std::string fail(const std::string &what) { return what; }

template <typename T>
std::string want_eq(const char *label, const T &got, const T &want) {
    if (got == want)
        return "";
    std::ostringstream os;
    os << label << ": got " << got << ", want " << want;
    return os.str();
}

// --- criterion bodies: return "" on pass, a detail line on failure ---------

std::string check_selftest() {
    std::ostringstream out, err;
    if (run_cli({"selftest"}, out, err) != 0)
        return fail("selftest exited nonzero: " + err.str() + out.str());
    return "";
}

std::string check_golden_eea() {
    std::ostringstream out, err;
    if (run_cli({"eea", "40", "73"}, out, err) != 0)
        return fail("eea 40 73 exited nonzero");
    const std::string want = "40 73 |\n"
                             "------+--\n"
                             "17 31 | 2\n"
                             " 6 11 | 2\n"
                             " 5  9 | 1\n"
                             " 1  2 | 4\n"
                             " 1  1 | 1\n"
                             " 0  1 |\n"
                             "k0 = 4\n"
                             "sign = -1\n";
    if (out.str() != want)
        return fail("eea 40 73 text differs from the golden table");

    const EeaTable t = eea_table(40, 73);
    const std::vector<EeaRow> rows{{17, 31, 2}, {6, 11, 2}, {5, 9, 1},
                                   {1, 2, 4},   {1, 1, 1},  {0, 1, std::nullopt}};
    if (t.rows() != rows)
        return fail("table rows differ");
    if (auto d = want_eq("k0", t.k0(), Int{4}); !d.empty())
        return d;
    if (auto d = want_eq("sign", t.sign(), Int{-1}); !d.empty())
        return d;
    if (31 * 40 - 17 * 73 != -1)
        return fail("unit determinant identity broke");
    return "";
}

std::string check_golden_run() {
    const JumpSequence seq = unit_jump_sequence(40, 73);
    if (auto d = want_eq("origin", seq.values.front(), Int{2808}); !d.empty())
        return d;
    if (auto d = want_eq("values", Int(seq.values.size()), Int{232});
        !d.empty())
        return d; // 231 unit jumps starting at 2808 land on 2577
    if (auto d = want_eq("floor", seq.values.back(), Int{2577}); !d.empty())
        return d;
    if (auto d = want_eq("jumps", Int(seq.jumps.size()), Int{231}); !d.empty())
        return d;
    for (Int j : seq.jumps)
        if (j != 1)
            return fail("a jump differs from 1");
    for (const DeformationStep &st : seq.steps)
        if (st.nu_predicted != st.nu_computed)
            return fail("step " + st.label + " disagrees with the kernel");
    if (!seq.final_shape)
        return fail("final diagram has no recognised shape");
    if (seq.final_shape->steep_count != 33 ||
        seq.final_shape->shallow_count != 7 ||
        seq.final_shape->shallow_slope != 1)
        return fail("final shape differs from (33,7,1)");
    return "";
}

std::string check_oracle_equivalence() {
    for (Int p = 2; p <= 7; ++p)
        for (Int q = p + 1; q <= 8; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            const TheoremReport rep = verify_theorem(p, q);
            std::ostringstream tag;
            tag << "(" << p << "," << q << ")";
            if (!rep.unit_jumps_ok)
                return fail(tag.str() +
                            ": attainable prefix is not all unit jumps");
            if (!rep.subset_ok)
                return fail(tag.str() +
                            ": a constructed value is not attainable");
        }
    return "";
}

std::string check_drop_laws() {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<Int> pd(5, 200);
    int done = 0;
    while (done < 500) {
        const Int p = pd(rng);
        std::uniform_int_distribution<Int> qd(p + 1, 4 * p);
        const Int q = qd(rng);
        if (std::gcd(p, q) != 1)
            continue;
        EeaLine line = EeaLine::of(p, q);
        if (line.rows_count() >= 3 && line.n() == 1)
            line = shift_line(line);
        if (line.rows_count() < 3 || line.a() == 1)
            continue; // edge-descent shapes have no level mechanics
        const Frame frame{LatticePoint{0, line.q()}, LatticePoint{line.p(), 0},
                          0};
        const Int n = line.n(), n1 = line.n1();
        const Int jmax = (line.rows_count() >= 4 && line.a2() != 0)
                             ? n1 - 1
                             : n1 - 2;
        if (jmax < 0)
            return fail("no admissible wrap index for a sweepable line");
        for (Int j = 0; j <= jmax; ++j) {
            for (Int k = 0; k < n; ++k) {
                const Diagram base = notch_diagram(line, j, k, frame);
                const Int base_nu = nu_axes(base);
                const NotchPoints pts = notch_points(line, j, k, frame);
                for (Int i = 1; i <= n - k; ++i) {
                    const Int chord =
                        nu_axes(deform(base, {pts.on_chord[i - 1]}));
                    if (chord != base_nu - i)
                        return fail("chord drop differs from its index");
                    const Int off = nu_axes(deform(base, {pts.offset[i - 1]}));
                    if (off != base_nu - (n - k) - i)
                        return fail("offset drop differs from n-k+i");
                }
            }
            if (j < jmax) {
                const Int up = nu_axes(wrap_diagram(line, j + 1, frame));
                const Int floor = nu_axes(notch_diagram(line, j, n, frame));
                if (up != floor + n)
                    return fail("wrap transition drop differs from n");
            }
        }
        if (line.rows_count() >= 4) {
            const Int b = nu_axes(bridge_diagram(line, frame));
            const Int floor = nu_axes(notch_diagram(line, jmax, n, frame));
            if (b != floor + n * n1 + 1)
                return fail("bridge drop differs from n*n1+1");
        }
        ++done;
    }
    return "";
}

Diagram random_axes_diagram(std::mt19937_64 &rng, Int span) {
    std::uniform_int_distribution<Int> cd(1, span);
    std::vector<LatticePoint> pts{{0, cd(rng)}, {cd(rng), 0}};
    std::uniform_int_distribution<Int> extra(3, 8);
    for (Int e = extra(rng); e > 0; --e)
        pts.push_back({cd(rng), cd(rng)});
    return diagram_from_points(pts);
}

std::string check_kernel_identities() {
    for (Int p = 1; p <= 60; ++p)
        for (Int q = 1; q <= 60; ++q)
            if (nu_axes(segment_diagram(p, q)) != (p - 1) * (q - 1))
                return fail("triangle value differs from (p-1)(q-1)");

    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<Int> cd(0, 50);
    int polys = 0;
    while (polys < 100) { // convex hulls of random point clouds
        std::vector<LatticePoint> cloud;
        std::uniform_int_distribution<Int> nd(4, 10);
        for (Int e = nd(rng); e > 0; --e)
            cloud.push_back({cd(rng), cd(rng)});
        std::sort(cloud.begin(), cloud.end());
        cloud.erase(std::unique(cloud.begin(), cloud.end()), cloud.end());
        if (cloud.size() < 3)
            continue;
        std::vector<LatticePoint> hull; // monotone chain, both halves
        for (int half = 0; half < 2; ++half) {
            const std::size_t base = hull.size();
            for (const LatticePoint &pt : cloud) {
                while (hull.size() >= base + 2 &&
                       cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
                    hull.pop_back();
                hull.push_back(pt);
            }
            hull.pop_back();
            std::reverse(cloud.begin(), cloud.end());
        }
        if (hull.size() < 3)
            continue;
        const PickData pick = pick_area(hull);
        if (pick.twice_area != pick.boundary + 2 * pick.interior - 2)
            return fail("area identity broke on a convex polygon");
        const LatticeCount direct = lattice_count(hull);
        if (pick.boundary != direct.boundary ||
            pick.interior != direct.interior)
            return fail("lattice counts differ on a convex polygon");
        ++polys;
    }
    for (int t = 0; t < 100; ++t) { // rectilinear closures of staircases
        const Diagram d = random_axes_diagram(rng, 50);
        std::vector<LatticePoint> poly{{0, 0}};
        poly.insert(poly.end(), d.vertices().begin(), d.vertices().end());
        const PickData pick = pick_area(poly);
        if (pick.twice_area != pick.boundary + 2 * pick.interior - 2)
            return fail("area identity broke on a staircase polygon");
        const LatticeCount direct = lattice_count(poly);
        if (pick.boundary != direct.boundary ||
            pick.interior != direct.interior)
            return fail("lattice counts differ on a staircase polygon");
    }

    std::uniform_int_distribution<Int> off(0, 1);
    for (int t = 0; t < 200; ++t) { // padding stability off the axes
        const Diagram base = random_axes_diagram(rng, 40);
        const Int dx = off(rng), dy = off(rng);
        std::vector<LatticePoint> pts;
        for (const LatticePoint &v : base.vertices())
            pts.push_back({v.x + dx, v.y + dy});
        const Diagram d(pts);
        const Int nu = nu_general(d); // must stabilise, not throw
        if (dx == 0 && dy == 0 && nu != nu_axes(d))
            return fail("general value differs on an axes-touching diagram");
        if (nu_general(d) != nu)
            return fail("general value is not stable across calls");
    }
    return "";
}

std::string check_chain_reproduction() {
    std::vector<std::pair<Int, Int>> pairs{{39, 73}, {38, 73}};
    for (Int q = 73; q >= 41; --q)
        pairs.push_back({37, q});
    for (Int p = 36; p >= 23; --p)
        pairs.push_back({p, 41});
    for (Int q = 40; q >= 29; --q)
        pairs.push_back({23, q});
    pairs.push_back({22, 29});

    std::vector<ChainStep> steps;
    for (const auto &[p, q] : pairs)
        steps.push_back(make_step(p, q));
    const ChainReport rep = validate_chain(40, 73, steps);
    if (!rep.ok)
        return fail("chain rejected: " + rep.error + " at index " +
                    std::to_string(rep.failing_index));
    if (auto d = want_eq("high", rep.high, Int{2808}); !d.empty())
        return d;
    if (auto d = want_eq("low", rep.low, Int{483}); !d.empty())
        return d;

    ChainPlan plan;
    plan.p0 = 40;
    plan.q0 = 73;
    plan.steps = steps;
    if (!check_full_coverage(plan, 40))
        return fail("chain does not reach full coverage");
    if (!plan.terminal || plan.terminal->degree != 40 ||
        plan.terminal->threshold != 1483)
        return fail("terminal rule differs from degree 40, threshold 1483");
    const Int homogeneous = (40 - 1) * (40 - 1) - 40 + 2;
    if (homogeneous != 1483)
        return fail("homogeneous threshold is not 1483");
    if (!(homogeneous > make_step(37, 41).covered_low))
        return fail("threshold does not clear the chain tail at 1308");
    if (auto d = want_eq("tail", make_step(37, 41).covered_low, Int{1308});
        !d.empty())
        return d;
    return "";
}

std::string check_negative_and_edge() {
    try {
        eea_table(4, 6);
        return fail("non-coprime table was accepted");
    } catch (const DomainError &) {
    }
    std::ostringstream out, err;
    if (run_cli({"verify", "4", "6"}, out, err) != 1)
        return fail("verify 4 6 did not exit with 1");
    if (err.str().find("coprime") == std::string::npos)
        return fail("verify 4 6 did not explain the rejection");

    const auto plan = search_chain(5, 7);
    if (!plan || plan->full_coverage)
        return fail("search below (5,7) must end with a partial plan");

    const EeaLine root = EeaLine::of(40, 73);
    const EeaLine peeled = EeaLine::from_table(peeled_table(root, 1, 1));
    if (peeled.n() != 1)
        return fail("peeled line lost its unit head");
    const EeaLine shifted = shift_line(peeled);
    if (shifted.p() != peeled.p() || shifted.q() != peeled.q())
        return fail("shift changed the header pair");
    if (shifted.sign() != -peeled.sign())
        return fail("shift kept the sign");
    const Frame f{LatticePoint{0, 31}, LatticePoint{17, 0}, 0};
    for (Int k = 0; k <= 2; ++k)
        if (notch_diagram(peeled, 0, k, f) != notch_diagram(shifted, 0, k, f))
            return fail("unit-head line acts differently from its shift");

    const JumpSequence tiny = unit_jump_sequence(2, 3);
    if (tiny.values != std::vector<Int>{2, 1})
        return fail("smallest pair walks the wrong values");
    return "";
}

struct Criterion {
    int id;
    const char *name;
    Int limit_ms;
    std::function<std::string()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {0, "selftest-prerequisite", 5000, check_selftest},
        {1, "golden-eea", 10, check_golden_eea},
        {2, "golden-run-40-73", 1000, check_golden_run},
        {3, "oracle-equivalence", 300000, check_oracle_equivalence},
        {4, "drop-laws", 60000, check_drop_laws},
        {5, "kernel-identities", 30000, check_kernel_identities},
        {6, "chain-reproduction", 10, check_chain_reproduction},
        {7, "negative-and-edge", 5000, check_negative_and_edge},
    };

    int failures = 0;
    for (const Criterion &c : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            detail = c.body();
        } catch (const std::exception &e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        const Int ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           stop - start)
                           .count();
        if (detail.empty() && ms > c.limit_ms) {
            std::ostringstream os;
            os << "took " << ms << " ms, limit " << c.limit_ms << " ms";
            detail = os.str();
        }
        if (detail.empty()) {
            std::printf("[PASS] %d. %s (%lld ms)\n", c.id, c.name,
                        static_cast<long long>(ms));
        } else {
            std::printf("[FAIL] %d. %s: %s\n", c.id, c.name, detail.c_str());
            ++failures;
        }
    }
    if (failures == 0)
        std::printf("acceptance: all %d criteria passed\n",
                    static_cast<int>(criteria.size()));
    else
        std::printf("acceptance: %d of %d criteria FAILED\n", failures,
                    static_cast<int>(criteria.size()));
    return failures == 0 ? 0 : 1;
}
