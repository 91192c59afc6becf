#include "newton/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "newton/diagram.hpp"
#include "newton/eea.hpp"
#include "newton/io.hpp"
#include "newton/oracle.hpp"
#include "newton/planner.hpp"
#include "newton/procedures.hpp"

namespace newton {

namespace {

using nlohmann::json;

int digits(Int v) { return static_cast<int>(std::to_string(v).size()); }

std::string sign_text(Int s) { return s > 0 ? "+1" : "-1"; }

void print_eea_text(const EeaTable &t, std::ostream &out) {
    int wa = digits(t.p());
    int wb = digits(t.q());
    int wn = 1;
    for (const auto &r : t.rows()) {
        wa = std::max(wa, digits(r.a));
        wb = std::max(wb, digits(r.b));
        if (r.n)
            wn = std::max(wn, digits(*r.n));
    }
    out << std::setw(wa) << t.p() << ' ' << std::setw(wb) << t.q() << " |\n";
    out << std::string(static_cast<std::size_t>(wa + wb + 2), '-') << '+'
        << std::string(static_cast<std::size_t>(wn + 1), '-') << '\n';
    for (const auto &r : t.rows()) {
        out << std::setw(wa) << r.a << ' ' << std::setw(wb) << r.b << " |";
        if (r.n)
            out << ' ' << *r.n;
        out << '\n';
    }
    out << "k0 = " << t.k0() << '\n';
    out << "sign = " << sign_text(t.sign()) << '\n';
}

json eea_json(const EeaTable &t) {
    json rows = json::array();
    for (const auto &r : t.rows()) {
        if (r.n)
            rows.push_back({r.a, r.b, *r.n});
        else
            rows.push_back({r.a, r.b});
    }
    return {{"p", t.p()}, {"q", t.q()}, {"rows", rows}, {"k0", t.k0()},
            {"sign", t.sign()}};
}

json points_json(const std::vector<LatticePoint> &pts) {
    json arr = json::array();
    for (const auto &pt : pts)
        arr.push_back({pt.x, pt.y});
    return arr;
}

int run_eea(Int p, Int q, bool as_json, std::ostream &out) {
    const EeaTable t = eea_table(p, q);
    if (as_json)
        out << eea_json(t).dump() << '\n';
    else
        print_eea_text(t, out);
    return 0;
}

int run_nu(const std::string &text, std::ostream &out) {
    out << nu_general(diagram_from_text(text)) << '\n';
    return 0;
}

int run_jumps(Int p, Int q, bool as_json, bool summary, std::ostream &out) {
    const JumpSequence seq = unit_jump_sequence(p, q);
    if (summary) {
        if (!seq.final_shape)
            throw DomainError("final diagram did not classify");
        const FinalShape &fs = *seq.final_shape;
        out << "origin=" << seq.origin_nu << " jumps=" << seq.jumps.size()
            << " final=(M=" << fs.steep_count << ",N=" << fs.shallow_count
            << ",m=" << fs.shallow_slope << ")\n";
        return 0;
    }
    if (as_json) {
        for (const auto &st : seq.steps) {
            json rec = {{"stage", st.stage},
                        {"label", st.label},
                        {"added_points", points_json(st.added_points)},
                        {"vertices", points_json(st.result.vertices())},
                        {"nu", st.nu_computed},
                        {"jump", st.duplicate ? 0 : 1},
                        {"duplicate", st.duplicate}};
            out << rec.dump() << '\n';
        }
        return 0;
    }
    out << "origin " << diagram_to_text(seq.origin) << " nu=" << seq.origin_nu
        << '\n';
    std::size_t next_stage = 0;
    for (const auto &st : seq.steps) {
        while (next_stage < seq.stages.size() &&
               seq.stages[next_stage].stage <= st.stage) {
            const StageInfo &si = seq.stages[next_stage++];
            out << "stage " << si.stage << " pair=(" << si.p << ',' << si.q
                << ") sign=" << sign_text(si.sign) << " route=" << si.route
                << " wraps=" << si.wrap_count << " nu=" << si.origin_nu << '\n';
        }
        out << st.label << " nu=" << st.nu_computed
            << (st.duplicate ? " dup" : "") << '\n';
    }
    out << "final " << diagram_to_text(seq.final_diagram);
    if (seq.final_shape) {
        const FinalShape &fs = *seq.final_shape;
        out << " shape M=" << fs.steep_count << " N=" << fs.shallow_count
            << " m=" << fs.shallow_slope;
    }
    out << '\n';
    out << "values=" << seq.values.size() << " jumps=" << seq.jumps.size()
        << '\n';
    return 0;
}

json verify_json(const TheoremReport &rep) {
    return {{"p", rep.p},
            {"q", rep.q},
            {"r", rep.r},
            {"expected_unit_jumps", rep.expected_unit_jumps},
            {"oracle_values", rep.oracle_values},
            {"procedure_values", rep.procedure_values},
            {"subset_ok", rep.subset_ok},
            {"unit_jumps_ok", rep.unit_jumps_ok}};
}

int emit_verify(const TheoremReport &rep, bool as_json, std::ostream &out) {
    if (as_json) {
        out << verify_json(rep).dump() << '\n';
    } else {
        out << "p=" << rep.p << " q=" << rep.q << " r=" << rep.r
            << " origin=" << rep.origin_nu
            << " expected_unit_jumps=" << rep.expected_unit_jumps
            << " unit_jumps_ok=" << (rep.unit_jumps_ok ? "true" : "false")
            << " subset_ok=" << (rep.subset_ok ? "true" : "false") << '\n';
    }
    return (rep.unit_jumps_ok && rep.subset_ok) ? 0 : 1;
}

int run_verify_sweep(Int pmin, Int pmax, bool as_json, std::ostream &out) {
    int code = 0;
    for (Int p = pmin; p < pmax; ++p)
        for (Int q = p + 1; q <= pmax; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            if (emit_verify(verify_theorem(p, q), as_json, out) != 0)
                code = 1;
        }
    return code;
}

int run_plan(Int p, Int q, Int max_len, bool as_json, std::ostream &out) {
    const std::optional<ChainPlan> plan = search_chain(p, q, max_len);
    if (!plan)
        throw DomainError("no chain found within the length limit");
    if (as_json) {
        json steps = json::array();
        for (const auto &s : plan->steps)
            steps.push_back({{"p", s.p},
                             {"q", s.q},
                             {"r", s.r},
                             {"mu", s.mu},
                             {"covered_low", s.covered_low}});
        json rec = {{"steps", steps},
                    {"full_coverage", plan->full_coverage},
                    {"terminal_rule", nullptr}};
        if (plan->terminal)
            rec["terminal_rule"] = {{"degree", plan->terminal->degree},
                                    {"threshold", plan->terminal->threshold}};
        out << rec.dump() << '\n';
        return 0;
    }
    out << "plan (" << p << ',' << q << ") mu=" << make_step(p, q).mu << '\n';
    for (const auto &s : plan->steps)
        out << '(' << s.p << ',' << s.q << ") r=" << s.r << " mu=" << s.mu
            << " covered_low=" << s.covered_low << '\n';
    out << "full_coverage=" << (plan->full_coverage ? "true" : "false") << '\n';
    if (plan->terminal)
        out << "terminal degree=" << plan->terminal->degree
            << " threshold=" << plan->terminal->threshold << '\n';
    else
        out << "terminal=none\n";
    return 0;
}

void expect(bool cond, const std::string &what) {
    if (!cond)
        throw DomainError(what);
}

int run_selftest(std::ostream &out) {
    struct Check {
        const char *name;
        std::function<void()> fn;
    };
    const std::vector<Check> checks = {
        {"eea-golden",
         [] {
             const EeaTable t = eea_table(40, 73);
             const std::vector<EeaRow> want = {{17, 31, 2}, {6, 11, 2},
                                               {5, 9, 1},   {1, 2, 4},
                                               {1, 1, 1},   {0, 1, std::nullopt}};
             expect(t.rows() == want, "table rows for (40,73)");
             expect(t.k0() == 4 && t.sign() == -1, "k0/sign for (40,73)");
             expect(31 * 40 - 17 * 73 == -1, "determinant identity");
             const EeaTable s = eea_table(5, 7);
             const std::vector<EeaRow> want57 = {{2, 3, 2}, {1, 1, 2},
                                                 {0, 1, std::nullopt}};
             expect(s.rows() == want57 && s.sign() == 1, "table for (5,7)");
         }},
        {"triangle-nu",
         [] {
             for (Int p = 1; p <= 12; ++p)
                 for (Int q = 1; q <= 12; ++q)
                     expect(nu_axes(segment_diagram(p, q)) ==
                                (p - 1) * (q - 1),
                            "triangle Newton number");
         }},
        {"staircase-nu",
         [] {
             const Diagram d({{0, 3}, {1, 1}, {2, 0}});
             expect(nu_axes(d) == 1 && nu_general(d) == 1, "staircase value");
         }},
        {"pick-golden",
         [] {
             const PickData pd =
                 pick_area({{0, 0}, {3, 4}, {5, 7}, {2, 3}});
             expect(pd.twice_area == 2 && pd.boundary == 4 &&
                        pd.interior == 0,
                    "parallelogram Pick data");
         }},
        {"jumps-golden-40-73",
         [] {
             const JumpSequence seq = unit_jump_sequence(40, 73);
             expect(seq.origin_nu == 2808, "origin value");
             expect(seq.values.front() == 2808 && seq.values.back() == 2577,
                    "value range");
             expect(seq.jumps.size() == 231, "jump count");
             expect(std::all_of(seq.jumps.begin(), seq.jumps.end(),
                                [](Int j) { return j == 1; }),
                    "all jumps are 1");
             expect(seq.final_shape && seq.final_shape->steep_count == 33 &&
                        seq.final_shape->shallow_count == 7 &&
                        seq.final_shape->shallow_slope == 1,
                    "final shape");
         }},
        {"jumps-golden-5-7",
         [] {
             const JumpSequence seq = unit_jump_sequence(5, 7);
             const std::vector<Int> want = {24, 23, 22, 21, 20, 19, 18};
             expect(seq.values == want, "value run for (5,7)");
         }},
        {"oracle-golden",
         [] {
             const AttainableSet s =
                 enumerate_attainable(segment_diagram(2, 3), 1);
             expect(s.values == std::vector<Int>({2, 1}), "values for (2,3)");
         }},
        {"verify-small",
         [] {
             const TheoremReport a = verify_theorem(5, 7);
             expect(a.unit_jumps_ok && a.subset_ok, "(5,7) cross-check");
             const TheoremReport b = verify_theorem(2, 3);
             expect(b.unit_jumps_ok && b.subset_ok, "(2,3) cross-check");
         }},
        {"roundtrip",
         [] {
             const Diagram d({{0, 73}, {33, 7}, {40, 0}});
             expect(diagram_from_text(diagram_to_text(d)) == d,
                    "text round-trip");
             expect(diagram_from_json(diagram_to_json(d)) == d,
                    "json round-trip");
         }},
        {"plan-golden",
         [] {
             expect(make_step(37, 41).covered_low == 1308,
                    "covered_low of (37,41)");
             const auto full = search_chain(40, 73);
             expect(full && full->full_coverage, "(40,73) full coverage");
             expect(full->terminal && full->terminal->degree == 40 &&
                        full->terminal->threshold == 1483,
                    "homogeneous threshold");
             const auto partial = search_chain(5, 7);
             expect(partial && !partial->full_coverage,
                    "(5,7) has no full chain");
         }},
    };
    for (const auto &c : checks) {
        try {
            c.fn();
        } catch (const std::exception &e) {
            out << "FAIL " << c.name << ": " << e.what() << '\n';
            return 1;
        }
        out << "ok " << c.name << '\n';
    }
    out << "selftest passed\n";
    return 0;
}

bool parse_range(const std::string &text, Int &lo, Int &hi) {
    const std::size_t pos = text.find("..");
    if (pos == std::string::npos)
        return false;
    try {
        std::size_t used = 0;
        lo = std::stoll(text.substr(0, pos), &used);
        if (used != pos)
            return false;
        const std::string tail = text.substr(pos + 2);
        hi = std::stoll(tail, &used);
        if (used != tail.size())
            return false;
    } catch (const std::exception &) {
        return false;
    }
    return lo >= 2 && hi > lo;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"exact lattice tools for Newton diagram jump sequences"};
    app.name("njump");
    app.require_subcommand(1);

    auto *eea = app.add_subcommand("eea", "reversed Euclid table of a pair");
    Int ep = 0, eq = 0;
    bool eea_as_json = false;
    eea->add_option("p", ep, "smaller entry")->required();
    eea->add_option("q", eq, "larger entry")->required();
    eea->add_flag("--json", eea_as_json, "machine-readable output");

    auto *nu = app.add_subcommand("nu", "Newton number of a diagram");
    std::vector<std::string> nu_tokens;
    nu->add_option("diagram", nu_tokens, "\"TRI p q\" or x1:y1,x2:y2,...")
        ->required()
        ->expected(-1);

    auto *jumps =
        app.add_subcommand("jumps", "constructive unit-jump run of a pair");
    Int jp = 0, jq = 0;
    bool jumps_as_json = false, jumps_summary = false;
    jumps->add_option("p", jp, "smaller entry")->required();
    jumps->add_option("q", jq, "larger entry")->required();
    jumps->add_flag("--json", jumps_as_json, "one JSON record per step");
    jumps->add_flag("--summary", jumps_summary, "one-line summary");

    auto *verify =
        app.add_subcommand("verify", "cross-check a run against brute force");
    Int vp = 0, vq = 0, vfloor = 0;
    bool verify_as_json = false;
    std::string pairs_range;
    verify->add_option("p", vp, "smaller entry");
    verify->add_option("q", vq, "larger entry");
    verify->add_option("--floor", vfloor, "search floor override");
    verify->add_flag("--json", verify_as_json, "machine-readable output");
    verify->add_option("--pairs", pairs_range,
                       "sweep all coprime pairs pmin..pmax");

    auto *plan = app.add_subcommand("plan", "search a coverage chain");
    Int pp = 0, pq = 0, max_len = 64;
    bool plan_as_json = false;
    plan->add_option("p", pp, "smaller entry")->required();
    plan->add_option("q", pq, "larger entry")->required();
    plan->add_option("--max-len", max_len, "chain length limit");
    plan->add_flag("--json", plan_as_json, "machine-readable output");

    auto *selftest =
        app.add_subcommand("selftest", "golden-data and invariant checks");

    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("njump");
    for (const auto &a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (app.got_subcommand(eea))
            return run_eea(ep, eq, eea_as_json, out);
        if (app.got_subcommand(nu)) {
            std::string text;
            for (const auto &tok : nu_tokens) {
                if (!text.empty())
                    text += ' ';
                text += tok;
            }
            return run_nu(text, out);
        }
        if (app.got_subcommand(jumps))
            return run_jumps(jp, jq, jumps_as_json, jumps_summary, out);
        if (app.got_subcommand(verify)) {
            const bool has_pairs = verify->count("--pairs") > 0;
            const bool has_p = verify->count("p") > 0;
            const bool has_q = verify->count("q") > 0;
            if (has_pairs && (has_p || has_q)) {
                err << "verify takes either a pair or --pairs, not both\n";
                return 2;
            }
            if (has_pairs) {
                Int lo = 0, hi = 0;
                if (!parse_range(pairs_range, lo, hi)) {
                    err << "bad --pairs range '" << pairs_range
                        << "': want pmin..pmax with 2 <= pmin < pmax\n";
                    return 2;
                }
                return run_verify_sweep(lo, hi, verify_as_json, out);
            }
            if (!has_p || !has_q) {
                err << "verify needs p and q, or --pairs\n";
                return 2;
            }
            std::optional<Int> floor_override;
            if (verify->count("--floor") > 0)
                floor_override = vfloor;
            return emit_verify(verify_theorem(vp, vq, floor_override),
                               verify_as_json, out);
        }
        if (app.got_subcommand(plan))
            return run_plan(pp, pq, max_len, plan_as_json, out);
        if (app.got_subcommand(selftest))
            return run_selftest(out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return 2;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace newton
