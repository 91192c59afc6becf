#include "newton/procedures.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace newton {

namespace {

std::string level_label(Int j, Int k, const char *kind, Int i) {
    return "j=" + std::to_string(j) + " k=" + std::to_string(k) + " " + kind +
           " i=" + std::to_string(i);
}

std::string edge_label(Int i) { return "edge i=" + std::to_string(i); }

EeaLine canonical(const EeaLine &line) {
    if (line.rows_count() >= 3 && line.n() == 1)
        return shift_line(line);
    return line;
}

void require_frame(const Frame &frame) {
    if (frame.top.x != 0 || frame.bottom.y != 0 || frame.top.y < 1 ||
        frame.bottom.x < 1 || frame.wrap0 < 0)
        throw DomainError("frame corners must sit on the axes");
}

// Stage geometry.  qpt is the frame corner the wrap corners walk away from,
// ppt the opposite one the cuts start at; ms orients both walks so that the
// produced points fall inside the frame triangle.
struct Geo {
    LatticePoint top, bottom, qpt, ppt;
    Int w0, s, ms;
    Int a, b, n;    // head row of the table
    Int a1, b1, n1; // second row
    Int a2, b2;     // third row ((0,1) when the table has only three rows)

    Geo(const EeaLine &line, const Frame &frame)
        : top(frame.top), bottom(frame.bottom), w0(frame.wrap0),
          s(line.sign() > 0 ? 1 : -1), a(line.a()), b(line.b()), n(line.n()),
          a1(line.a1()), b1(line.b1()) {
        require_frame(frame);
        qpt = s < 0 ? top : bottom;
        ppt = s < 0 ? bottom : top;
        ms = -s;
        n1 = line.rows_count() >= 3 ? line.n1() : 0;
        a2 = line.rows_count() >= 3 ? line.a2() : 0;
        b2 = line.rows_count() >= 3 ? line.b2() : 1;
    }

    Int jmax() const { return a2 != 0 ? n1 - 1 : n1 - 2; }

    LatticePoint run_corner(Int c) const {
        return LatticePoint{qpt.x + c * ms * a1, qpt.y - c * ms * b1};
    }
    LatticePoint cut_corner(Int j, Int k) const {
        const Int dx = a - (j + 1) * a1, dy = b - (j + 1) * b1;
        return LatticePoint{ppt.x - k * ms * dx, ppt.y + k * ms * dy};
    }
    LatticePoint chord_point(Int j, Int k, Int i) const {
        const LatticePoint c = cut_corner(j, k);
        const Int dx = a - j * a1, dy = b - j * b1;
        return LatticePoint{c.x - ms * i * dx, c.y + ms * i * dy};
    }
    LatticePoint offset_point(Int j, Int k, Int i) const {
        const LatticePoint c = chord_point(j, k, i);
        return LatticePoint{c.x - s * a1, c.y + s * b1};
    }
    LatticePoint bridge_point() const {
        return LatticePoint{ppt.x - ms * (n - 1) * a2, ppt.y + ms * (n - 1) * b2};
    }

    Diagram wrap(Int j) const {
        return diagram_from_points({top, bottom, run_corner(w0 + n * j)});
    }
    Diagram notch(Int j, Int k) const {
        return diagram_from_points(
            {top, bottom, run_corner(w0 + n * j + k), cut_corner(j, k)});
    }
};

void require_sweepable(const EeaLine &line) {
    if (line.a() < 2)
        throw DomainError("line has a unit head entry; use an edge descent");
}

// Tracks the distinct values reached so far; enforces that every step either
// extends the run by exactly one or repeats an already attained value.
struct RunState {
    Int cur_min = 0;
    std::set<Int> seen;
    std::vector<Int> values;

    explicit RunState(Int origin) : cur_min(origin) {
        seen.insert(origin);
        values.push_back(origin);
    }

    bool record(Int nu) {
        if (nu == cur_min - 1) {
            cur_min = nu;
            seen.insert(nu);
            values.push_back(nu);
            return false;
        }
        if (seen.count(nu))
            return true;
        throw DomainError("internal: step value breaks the unit-jump run");
    }
};

DeformationStep make_step(Int stage, std::string label, const Diagram &base,
                          const LatticePoint &pt, Int predicted,
                          RunState *state) {
    DeformationStep st;
    st.stage = stage;
    st.label = std::move(label);
    st.added_points = {pt};
    st.base = base;
    st.result = deform(base, {pt});
    st.nu_predicted = predicted;
    st.nu_computed = nu_axes(st.result);
    if (st.nu_computed != st.nu_predicted)
        throw DomainError("internal: step value differs from its closed form");
    if (state)
        st.duplicate = state->record(st.nu_computed);
    return st;
}

void run_level(const Geo &g, Int j, Int stage, RunState *state,
               std::vector<DeformationStep> &out) {
    Int base_nu = nu_axes(g.notch(j, 0));
    for (Int k = 0; k < g.n; ++k) {
        const Diagram base = g.notch(j, k);
        if (nu_axes(base) != base_nu)
            throw DomainError("internal: level base is off its closed form");
        for (Int i = 1; i <= g.n - k; ++i)
            out.push_back(make_step(stage, level_label(j, k, "chord", i), base,
                                    g.chord_point(j, k, i), base_nu - i,
                                    state));
        for (Int i = 1; i <= g.n - k; ++i)
            out.push_back(make_step(stage, level_label(j, k, "offset", i),
                                    base, g.offset_point(j, k, i),
                                    base_nu - (g.n - k) - i, state));
        base_nu -= 2 * (g.n - k);
    }
    if (nu_axes(g.notch(j, g.n)) != base_nu)
        throw DomainError("internal: level floor is off its closed form");
}

void run_sweep(const Geo &g, Int stage, RunState *state,
               std::vector<DeformationStep> &out) {
    const Int jmax = g.jmax();
    if (jmax < 0)
        throw DomainError("internal: no admissible wrap index");
    for (Int j = 0; j <= jmax; ++j) {
        run_level(g, j, stage, state, out);
        if (j < jmax &&
            nu_axes(g.wrap(j + 1)) != nu_axes(g.notch(j, g.n)) + g.n)
            throw DomainError("internal: wrap transition is off by more than n");
    }
}

void run_upper_edge(const EeaLine &line, const Geo &g, Int stage,
                    RunState *state, std::vector<DeformationStep> &out) {
    const Diagram base = g.wrap(0);
    const Int origin = nu_axes(base), m = line.m();
    for (Int i = 1; i < line.p(); ++i) {
        LatticePoint x{g.top.x + i, g.top.y - i * (m + 1)};
        out.push_back(make_step(stage, edge_label(i), base, x, origin - i,
                                state));
    }
}

void run_lower_edge(const EeaLine &line, const Geo &g, Int stage,
                    RunState *state, std::vector<DeformationStep> &out) {
    const Diagram base = g.wrap(0);
    const Int origin = nu_axes(base), m = line.m();
    for (Int i = 1; i < line.p(); ++i) {
        LatticePoint x{g.bottom.x - i, g.bottom.y + i * m};
        out.push_back(make_step(stage, edge_label(i), base, x, origin - i,
                                state));
    }
}

void require_upper(const EeaLine &line) {
    if (line.classify() != EeaClass::ShortA1)
        throw DomainError(
            "upper edge descent needs a three-row table with a unit head");
    if (line.sign() != 1)
        throw DomainError("internal: upper edge line has the wrong sign");
}

void require_lower(const EeaLine &line) {
    if (line.classify() != EeaClass::VeryShort)
        throw DomainError("lower edge descent needs a two-row table");
    if (line.sign() != -1)
        throw DomainError("internal: lower edge line has the wrong sign");
}

} // namespace

Diagram wrap_diagram(const EeaLine &raw, Int j, const Frame &frame) {
    const EeaLine line = canonical(raw);
    const Geo g(line, frame);
    if (j < 0 || (j > 0 && (line.a() < 2 || j > g.jmax())))
        throw DomainError("wrap index out of range");
    return g.wrap(j);
}

Diagram notch_diagram(const EeaLine &raw, Int j, Int k, const Frame &frame) {
    const EeaLine line = canonical(raw);
    require_sweepable(line);
    const Geo g(line, frame);
    if (j < 0 || j > g.jmax())
        throw DomainError("wrap index out of range");
    if (k < 0 || k > g.n)
        throw DomainError("level index out of range");
    return g.notch(j, k);
}

NotchPoints notch_points(const EeaLine &raw, Int j, Int k,
                         const Frame &frame) {
    const EeaLine line = canonical(raw);
    require_sweepable(line);
    const Geo g(line, frame);
    if (j < 0 || j > g.jmax())
        throw DomainError("wrap index out of range");
    if (k < 0 || k > g.n)
        throw DomainError("level index out of range");
    NotchPoints pts;
    for (Int i = 1; i <= g.n - k; ++i) {
        pts.on_chord.push_back(g.chord_point(j, k, i));
        pts.offset.push_back(g.offset_point(j, k, i));
    }
    return pts;
}

Diagram bridge_diagram(const EeaLine &raw, const Frame &frame) {
    const EeaLine line = canonical(raw);
    require_sweepable(line);
    if (line.rows_count() < 4)
        throw DomainError("bridge needs a fourth table row");
    const Geo g(line, frame);
    if (g.n < 2)
        throw DomainError("bridge needs a head multiplier of at least 2");
    return diagram_from_points(
        {g.top, g.bottom, g.run_corner(g.w0), g.bridge_point()});
}

std::vector<DeformationStep> descend_level(const EeaLine &raw, Int j,
                                           const Frame &frame) {
    const EeaLine line = canonical(raw);
    require_sweepable(line);
    const Geo g(line, frame);
    if (j < 0 || j > g.jmax())
        throw DomainError("wrap index out of range");
    std::vector<DeformationStep> out;
    run_level(g, j, 0, nullptr, out);
    return out;
}

std::vector<DeformationStep> descend_sweep(const EeaLine &raw,
                                           const Frame &frame) {
    const EeaLine line = canonical(raw);
    require_sweepable(line);
    const Geo g(line, frame);
    RunState state(nu_axes(g.wrap(0)));
    std::vector<DeformationStep> out;
    run_sweep(g, 0, &state, out);
    return out;
}

std::vector<DeformationStep> descend_upper_edge(const EeaLine &raw,
                                                const Frame &frame) {
    const EeaLine line = canonical(raw);
    require_upper(line);
    const Geo g(line, frame);
    RunState state(nu_axes(g.wrap(0)));
    std::vector<DeformationStep> out;
    run_upper_edge(line, g, 0, &state, out);
    return out;
}

std::vector<DeformationStep> descend_lower_edge(const EeaLine &raw,
                                                const Frame &frame) {
    const EeaLine line = canonical(raw);
    require_lower(line);
    const Geo g(line, frame);
    RunState state(nu_axes(g.wrap(0)));
    std::vector<DeformationStep> out;
    run_lower_edge(line, g, 0, &state, out);
    return out;
}

JumpSequence unit_jump_sequence(Int a0, Int b0) {
    const EeaTable table = eea_table(a0, b0);
    const EeaLine root = EeaLine::from_table(table);
    const auto &rows = table.rows();
    const Int k0 = table.k0();
    const Int m = b0 / a0, r = b0 % a0;

    JumpSequence seq;
    seq.origin = segment_diagram(a0, b0);
    seq.origin_nu = nu_axes(seq.origin);
    const Frame base_frame{LatticePoint{0, b0}, LatticePoint{a0, 0}, 0};
    RunState state(seq.origin_nu);

    if (k0 == 0) {
        const Geo g(root, base_frame);
        seq.stages.push_back(
            StageInfo{1, a0, b0, root.sign(), 0, "lower-edge", seq.origin_nu});
        run_lower_edge(root, g, 1, &state, seq.steps);
    } else {
        // Multipliers of the nested lines: z[k] heads the stage-k table and
        // z[k-1]-1 wrap corners are already spent when stage k begins.
        std::vector<Int> z(k0 + 2);
        z[0] = 1;
        z[1] = *rows[0].n;
        for (Int k = 2; k <= k0 + 1; ++k)
            z[k] = z[k - 2] + z[k - 1] * *rows[k - 1].n;
        if (z[k0 + 1] != a0)
            throw DomainError("internal: stage multipliers do not telescope");

        for (Int k = 1; k <= k0; ++k) {
            const Int ps = z[k] * rows[k - 1].a + rows[k].a;
            const Int qs = z[k] * rows[k - 1].b + rows[k].b;
            std::vector<EeaRow> stage_rows;
            stage_rows.push_back(EeaRow{rows[k - 1].a, rows[k - 1].b, z[k]});
            stage_rows.insert(stage_rows.end(), rows.begin() + k, rows.end());
            const EeaLine line =
                EeaLine::from_table(EeaTable::from_rows(ps, qs, stage_rows));
            if (line.sign() != ((k0 - k) % 2 == 0 ? 1 : -1))
                throw DomainError("internal: stage sign is off its closed form");
            if (qs / ps != m)
                throw DomainError("internal: stage slope drifted");

            const Frame frame{base_frame.top, base_frame.bottom, z[k - 1] - 1};
            const Geo g(line, frame);
            const Int origin_nu = nu_axes(g.wrap(0));
            if (k == 1 ? origin_nu != seq.origin_nu
                       : !state.seen.count(origin_nu))
                throw DomainError("internal: stage origin was never attained");

            std::string route;
            if (k < k0)
                route = "sweep";
            else if (line.a() == 1)
                route = "upper-edge";
            else
                route = "short-sweep";
            seq.stages.push_back(StageInfo{k, ps, qs, line.sign(), frame.wrap0,
                                           route, origin_nu});

            if (route == "upper-edge") {
                require_upper(line);
                run_upper_edge(line, g, k, &state, seq.steps);
            } else {
                run_sweep(g, k, &state, seq.steps);
            }
        }
    }

    if (state.cur_min != seq.origin_nu - r * (a0 - r))
        throw DomainError("internal: run stopped short of the floor");
    seq.values = state.values;
    for (std::size_t i = 1; i < seq.values.size(); ++i)
        seq.jumps.push_back(seq.values[i - 1] - seq.values[i]);
    seq.final_diagram = seq.steps.back().result;
    seq.final_shape = classify_final(seq.final_diagram);
    return seq;
}

std::optional<FinalShape> classify_final(const Diagram &d) {
    const auto &v = d.vertices();
    if (v.size() != 3 || v[0].x != 0 || v[2].y != 0)
        return std::nullopt;
    const Int mx = v[1].x, my = v[1].y;
    const Int nx = v[2].x - v[1].x, ny = v[0].y - v[1].y;
    if (mx < 1 || nx < 1 || my < 1)
        return std::nullopt;
    if (ny % mx != 0 || my % nx != 0)
        return std::nullopt;
    const Int steep = ny / mx, shallow = my / nx;
    if (steep != shallow + 1)
        return std::nullopt;
    return FinalShape{mx, nx, shallow};
}

} // namespace newton
