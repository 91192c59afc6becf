#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "newton/cli.hpp"
#include "newton/io.hpp"

using namespace newton;
using nlohmann::json;

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("eea table rendering") {
    const CliResult r = run({"eea", "40", "73"});
    CHECK(r.rc == 0);
    CHECK(r.err.empty());
    CHECK(r.out == "40 73 |\n"
                   "------+--\n"
                   "17 31 | 2\n"
                   " 6 11 | 2\n"
                   " 5  9 | 1\n"
                   " 1  2 | 4\n"
                   " 1  1 | 1\n"
                   " 0  1 |\n"
                   "k0 = 4\n"
                   "sign = -1\n");

    const CliResult j = run({"eea", "40", "73", "--json"});
    CHECK(j.rc == 0);
    const json want = {{"k0", 4},
                       {"p", 40},
                       {"q", 73},
                       {"rows",
                        {{17, 31, 2},
                         {6, 11, 2},
                         {5, 9, 1},
                         {1, 2, 4},
                         {1, 1, 1},
                         {0, 1}}},
                       {"sign", -1}};
    CHECK(json::parse(j.out) == want);
}

TEST_CASE("nu subcommand") {
    CHECK(run({"nu", "TRI", "2", "3"}).out == "2\n");
    CHECK(run({"nu", "0:3,1:1,2:0"}).out == "1\n");
    CHECK(run({"nu", "0:7,1:5,4:1,5:0"}).out == "20\n");
    // a diagram a unit off each axis still has a stable value
    CHECK(run({"nu", "1:2,2:0"}).out == "3\n");

    const CliResult bad = run({"nu", "2:2,3:0"});
    CHECK(bad.rc == 1);
    CHECK(bad.err == "error: diagram is farther than 1 from an axis\n");
}

TEST_CASE("jump run rendering") {
    const CliResult r = run({"jumps", "5", "7"});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "origin 0:7,5:0 nu=24\n"
          "stage 1 pair=(5,7) sign=+1 route=short-sweep wraps=0 nu=24\n"
          "j=0 k=0 chord i=1 nu=23\n"
          "j=0 k=0 chord i=2 nu=22\n"
          "j=0 k=0 offset i=1 nu=21\n"
          "j=0 k=0 offset i=2 nu=20\n"
          "j=0 k=1 chord i=1 nu=19\n"
          "j=0 k=1 offset i=1 nu=18\n"
          "final 0:7,2:3,5:0 shape M=2 N=3 m=1\n"
          "values=7 jumps=6\n");

    CHECK(run({"jumps", "40", "73", "--summary"}).out ==
          "origin=2808 jumps=231 final=(M=33,N=7,m=1)\n");
}

TEST_CASE("jump run json stream") {
    const CliResult r = run({"jumps", "5", "7", "--json"});
    CHECK(r.rc == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);

    const json first = json::parse(lines.front());
    const json want = {{"added_points", {{2, 4}}},
                       {"duplicate", false},
                       {"jump", 1},
                       {"label", "j=0 k=0 chord i=1"},
                       {"nu", 23},
                       {"stage", 1},
                       {"vertices", {{0, 7}, {2, 4}, {5, 0}}}};
    CHECK(first == want);

    // every record's vertex list round-trips through the diagram codec
    for (const std::string &line : lines) {
        const json rec = json::parse(line);
        const Diagram d = diagram_from_json({{"vertices", rec["vertices"]}});
        CHECK(diagram_to_json(d)["vertices"] == rec["vertices"]);
        CHECK(nu_axes(d) == rec["nu"].get<Int>());
    }

    const std::vector<std::string> big =
        lines_of(run({"jumps", "40", "73", "--json"}).out);
    REQUIRE(big.size() == 299);
    const json last = json::parse(big.back());
    CHECK(last["label"] == "edge i=33");
    CHECK(last["duplicate"] == true);
    CHECK(last["jump"] == 0);
    CHECK(last["nu"] == 2577);
    CHECK(last["stage"] == 4);
    CHECK(last["vertices"] == json({{0, 73}, {33, 7}, {40, 0}}));
}

TEST_CASE("verification subcommand") {
    const CliResult r = run({"verify", "5", "7"});
    CHECK(r.rc == 0);
    CHECK(r.out == "p=5 q=7 r=2 origin=24 expected_unit_jumps=6 "
                   "unit_jumps_ok=true subset_ok=true\n");

    const json j = json::parse(run({"verify", "5", "7", "--json"}).out);
    CHECK(j["p"] == 5);
    CHECK(j["q"] == 7);
    CHECK(j["r"] == 2);
    CHECK(j["expected_unit_jumps"] == 6);
    CHECK(j["oracle_values"] == json({24, 23, 22, 21, 20, 19, 18}));
    CHECK(j["procedure_values"] == json({24, 23, 22, 21, 20, 19, 18}));
    CHECK(j["unit_jumps_ok"] == true);
    CHECK(j["subset_ok"] == true);

    const CliResult sweep = run({"verify", "--pairs", "2..5"});
    CHECK(sweep.rc == 0);
    const std::vector<std::string> lines = lines_of(sweep.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "p=2 q=3 r=1 origin=2 expected_unit_jumps=1 "
                      "unit_jumps_ok=true subset_ok=true");
    CHECK(lines[4] == "p=4 q=5 r=1 origin=12 expected_unit_jumps=3 "
                      "unit_jumps_ok=true subset_ok=true");

    const CliResult bad = run({"verify", "4", "6"});
    CHECK(bad.rc == 1);
    CHECK(bad.err == "error: entries must be coprime\n");
}

TEST_CASE("plan subcommand") {
    const json j = json::parse(run({"plan", "5", "7", "--json"}).out);
    const json want = {
        {"full_coverage", false},
        {"steps",
         {{{"covered_low", 15}, {"mu", 18}, {"p", 4}, {"q", 7}, {"r", 3}}}},
        {"terminal_rule", nullptr}};
    CHECK(j == want);

    const CliResult full = run({"plan", "40", "73"});
    CHECK(full.rc == 0);
    CHECK(full.out == "plan (40,73) mu=2808\n"
                      "(40,69) r=29 mu=2652 covered_low=2333\n"
                      "(40,61) r=21 mu=2340 covered_low=1941\n"
                      "(37,55) r=18 mu=1944 covered_low=1602\n"
                      "(36,47) r=11 mu=1610 covered_low=1335\n"
                      "full_coverage=true\n"
                      "terminal degree=40 threshold=1483\n");

    const CliResult partial = run({"plan", "5", "7"});
    CHECK(partial.out == "plan (5,7) mu=24\n"
                         "(4,7) r=3 mu=18 covered_low=15\n"
                         "full_coverage=false\n"
                         "terminal=none\n");

    CHECK(run({"plan", "4", "6"}).rc == 1);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"verify"}).rc == 2);
    CHECK(run({"verify"}).err == "verify needs p and q, or --pairs\n");
    CHECK(run({"verify", "5", "7", "--pairs", "2..5"}).rc == 2);
    CHECK(run({"verify", "5", "7", "--pairs", "2..5"}).err ==
          "verify takes either a pair or --pairs, not both\n");
    CHECK(run({"verify", "--pairs", "nonsense"}).rc == 2);
    CHECK(run({"jumps", "5"}).rc == 2);
    CHECK(run({"frobnicate"}).rc == 2);
    CHECK(run({}).rc == 2);
}

TEST_CASE("help") {
    const CliResult r = run({"--help"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
    CHECK(r.out.find("jumps") != std::string::npos);
    const CliResult sub = run({"jumps", "--help"});
    CHECK(sub.rc == 0);
    CHECK(sub.out.find("Usage") != std::string::npos);
}

TEST_CASE("selftest") {
    const CliResult r = run({"selftest"});
    CHECK(r.rc == 0);
    const std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(!lines.empty());
    CHECK(lines.back() == "selftest passed");
    for (std::size_t i = 0; i + 1 < lines.size(); ++i)
        CHECK(lines[i].substr(0, 3) == "ok ");
}
