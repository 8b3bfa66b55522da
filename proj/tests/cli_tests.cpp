#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bridgecalc/catalog.hpp"
#include "bridgecalc/cli.hpp"
#include "bridgecalc/json_io.hpp"

using namespace bridgecalc;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(BRIDGECALC_DATA_DIR) + "/" + name; }

std::string scratch(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("bridgecalc_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("invariants of the 1-bridge unknot") {
    auto r = run({"invariants", data("unknot1bridge.bridge.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("netg 0\n") != std::string::npos);
    CHECK(r.out.find("netw 2\n") != std::string::npos);

    auto j = parse_json_text(run({"invariants", data("unknot1bridge.bridge.json"), "--format", "json", "--m", "2"}).out);
    CHECK(j["netw"] == 2);
    CHECK(j["netx_m"]["2"] == -1);
    CHECK(j["netx_m"].size() == 1);
}

TEST_CASE("validate exit codes") {
    CHECK(run({"validate", data("unknot1bridge.bridge.json")}).code == 0);

    json j = state_to_json(unknot_1bridge());
    j["vpcs"][0]["tangle"]["bridge"] = json::array();
    auto r = run({"validate", scratch("broken.json", j.dump())});
    CHECK(r.code == 1);
    CHECK(r.out.find("puncture-usage") != std::string::npos);

    CHECK(run({"validate", scratch("garbage.json", "{\"surfaces\": 3")}).code == 2);
    CHECK(run({"validate", scratch("wrongshape.json", "{\"surfaces\": 3}")}).code == 2);
    CHECK(run({"validate", "/nonexistent/state.json"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen is byte-identical for equal seeds") {
    auto a = run({"gen", "--seed", "7", "--max-size", "5"});
    auto b = run({"gen", "--seed", "7", "--max-size", "5"});
    REQUIRE(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);

    std::istringstream lines(a.out);
    std::string first;
    std::getline(lines, first);
    CHECK(state_to_json(state_from_json(parse_json_text(first))).dump() == first);
}

TEST_CASE("BRIDGECALC_SEED overrides --seed") {
    auto seven = run({"gen", "--seed", "7", "--max-size", "5"}).out;
    auto three = run({"gen", "--seed", "3", "--max-size", "5"}).out;
    CHECK(seven != three);
    setenv("BRIDGECALC_SEED", "7", 1);
    auto overridden = run({"gen", "--seed", "3", "--max-size", "5"}).out;
    setenv("BRIDGECALC_SEED", "seven", 1);
    int bad = run({"gen"}).code;
    unsetenv("BRIDGECALC_SEED");
    CHECK(overridden == seven);
    CHECK(bad == 2);
}

TEST_CASE("bounds print exact values") {
    CHECK(run({"bound", "whitehead", "--n", "3", "--b", "2"}).out == "16\n");
    CHECK(run({"bound", "cable", "--q", "3", "--b", "2"}).out == "6\n");
    CHECK(run({"bound", "plain", "--omega", "2", "--b", "3", "--lensed"}).out == "4\n");
    CHECK(run({"bound", "omega1", "--bg", "5", "--lensed"}).out == "4\n");
    CHECK(run({"bound", "additivity", "--ba", "3/2", "--bb", "2", "--u", "1", "--g", "0"}).out == "5/2\n");
    CHECK(run({"bound", "handle", "--netw-h", "3", "--netw-l", "5", "--omega", "2", "--g1", "1"}).code == 0);
    CHECK(run({"bound", "handle", "--netw-h", "1", "--netw-l", "5", "--omega", "2", "--g1", "1"}).code == 1);
    CHECK(run({"bound", "cable", "--q", "2", "--b", "x/2"}).code == 2);
    CHECK(run({"bound", "pretzel"}).code == 2);
}

TEST_CASE("thin, apply and the output file") {
    auto r = run({"thin", data("torus_stack2.bridge.json"), "--greedy"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 start [4,4,4]\n1 consolidate [4,4]\n2 consolidate [4]\nlocally thin\n");

    std::string script = scratch("amalgamate.moves.json", R"({"moves": [{"op": "amalgamate", "vpcs": ["H1^p", "H1^q"]}]})");
    CHECK(run({"thin", data("torus_stack2.bridge.json"), "--script", script}).code == 1);

    std::string outPath = (std::filesystem::temp_directory_path() / "bridgecalc_cli_applied.json").string();
    auto a = run({"apply", data("torus_stack2.bridge.json"), "--script", script, "--out", outPath});
    CHECK(a.code == 0);
    CHECK(run({"validate", outPath}).code == 0);
}

TEST_CASE("compose then split") {
    std::string composite = (std::filesystem::temp_directory_path() / "bridgecalc_cli_composite.json").string();
    auto c = run({"compose", data("unknot1bridge.bridge.json"), data("two_bridge_unknot.bridge.json"), "--kind",
                  "connected", "--u", "1", "--out", composite});
    REQUIRE(c.code == 0);
    auto inv = parse_json_text(run({"invariants", composite, "--format", "json"}).out);
    CHECK(inv["netw"] == 4);

    auto s = run({"split", composite, "--sphere", "S"});
    REQUIRE(s.code == 0);
    auto j = parse_json_text(s.out);
    CHECK(state_text(state_from_json(j["a"])) != state_text(state_from_json(j["b"])));

    CHECK(run({"compose", data("unknot1bridge.bridge.json"), data("unknot1bridge.bridge.json"), "--u", "2"}).code == 2);
}

TEST_CASE("crush and classify") {
    auto r = run({"crush", data("crush_example.bridge.json"), "--spec", data("crush_example.crush.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("v1 A:v1\n") != std::string::npos);
    CHECK(r.out.find("accountingHolds true\n") != std::string::npos);

    CHECK(run({"classify", data("two_towers.qword.json")}).out.rfind("outcome TwoTowers\n", 0) == 0);
    auto j = parse_json_text(run({"classify", data("outer_handle.qword.json"), "--format", "json"}).out);
    CHECK(j["outcome"] == "HasCrushableCandidate");
    CHECK(j["crushable"].size() == 1);
}
