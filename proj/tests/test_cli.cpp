// End-to-end tests driving the installed command-line binary through a shell,
// validating the machine-readable schema, determinism and exit codes.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "dicart/cartier.hpp"
#include "dicart/polytope.hpp"
#include "dicart/toric.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"

using namespace dicart;
using json = nlohmann::json;

namespace {

int run_cli(const std::string& args, std::string* out) {
    const std::string cmd = std::string(DICART_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string acc;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) acc.append(buf, n);
    const int status = pclose(pipe);
    if (out) *out = acc;
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string write_config(const std::string& name, const std::string& body) {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("dicart_cli_test_" + std::to_string(getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    const auto path = dir / name;
    std::ofstream(path) << body;
    return path.string();
}

FracVector fv_of(const json& j) {
    std::vector<Int> nums;
    for (const auto& k : j.at("num")) nums.emplace_back(k.get<std::int64_t>());
    return FracVector(std::move(nums), Int(j.at("den").get<std::int64_t>()));
}

const std::string kQuadricRays = "--rays \"1,0;-1,2\"";

}  // namespace

TEST_CASE("info reports the cone summary under the versioned schema") {
    std::string out;
    REQUIRE(run_cli("info " + kQuadricRays + " --format json", &out) == 0);
    const json doc = json::parse(out);
    CHECK(doc.at("schema") == "dicart/v1");
    CHECK(doc.at("command") == "info");
    CHECK(doc.at("dim") == 2);
    CHECK(doc.at("rays") == json::parse("[[-1,2],[1,0]]"));
    CHECK(doc.at("smooth") == false);
    CHECK(doc.at("gorenstein_shift") == json::parse("[\"-1\",\"-1\"]"));
}

TEST_CASE("membership certificates round-trip and re-validate") {
    const std::string cfg = write_config(
        "member.json", R"({"rays": [[1,0],[-1,2]], "p": 5, "e": 1, "d": [0,0]})");
    std::string out;
    REQUIRE(run_cli("d2 check --config " + cfg + " --format json", &out) == 0);
    const json doc = json::parse(out);
    CHECK(doc.at("verdict") == "Member");
    REQUIRE(doc.at("witnesses").size() == 25);

    // Re-validate every serialized witness against a freshly built region.
    const ToricDatum datum = th::quadric();
    const HPolytope p = anticanonical(datum);
    const FracVector d = fv_of(doc.at("d"));
    const HPolytope qd = interior(intersect(p, reflect_translate(d, p)));

    std::set<ResidueClass> classes;
    for (const auto& w : doc.at("witnesses")) {
        const FracVector pt = fv_of(w.at("point"));
        CHECK(contains(qd, pt));
        const ResidueClass cls = residue_class(pt);
        for (std::size_t i = 0; i < cls.res.size(); ++i)
            CHECK(cls.res[i] == Int(w.at("class").at(i).get<std::int64_t>()));
        classes.insert(cls);
    }
    CHECK(classes.size() == 25);
}

TEST_CASE("non-membership names the first missing class") {
    std::string out;
    REQUIRE(run_cli("d2 check " + kQuadricRays + " --p 5 --d \"0,-1\" --format json", &out) == 0);
    const json doc = json::parse(out);
    CHECK(doc.at("verdict") == "NonMember");
    CHECK(doc.at("missing_class") == json::parse("[0,2]"));
    CHECK(!doc.contains("witnesses"));
}

TEST_CASE("generator extraction reports the scanned box and flags auto mode") {
    std::string out;
    REQUIRE(run_cli("d2 gens " + kQuadricRays + " --p 5 --format json", &out) == 0);
    const json doc = json::parse(out);
    CHECK(doc.at("box_auto") == true);
    CHECK(doc.at("count") == 5);
    const std::vector<std::vector<std::int64_t>> expect = {
        {-4, -1}, {-3, -1}, {0, 0}, {1, -1}, {2, -1}};
    REQUIRE(doc.at("generators").size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(fv_of(doc.at("generators").at(i)) ==
              th::fv({expect[i][0], expect[i][1]}, 5));
    }

    std::string boxed;
    REQUIRE(run_cli("d2 gens " + kQuadricRays + " --p 5 --box \"-1,1;-1,1\" --format json",
                    &boxed) == 0);
    const json bdoc = json::parse(boxed);
    CHECK(bdoc.at("box_auto") == false);
    CHECK(bdoc.at("generators") == doc.at("generators"));
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const std::string args :
         {"d2 gens " + kQuadricRays + " --p 7 --format json",
          "d2 check " + kQuadricRays + " --p 3 --d \"0,0\" --format json",
          "fsig " + kQuadricRays + " --p 3 --e-max 2 --format json",
          "oracle " + kQuadricRays + " --p 3 --d \"1,0\""}) {
        std::string first, second;
        REQUIRE(run_cli(args, &first) == 0);
        REQUIRE(run_cli(args, &second) == 0);
        CHECK(first == second);
        CHECK(!first.empty());
    }
}

TEST_CASE("splitting verdicts by characteristic") {
    std::string out;
    REQUIRE(run_cli("split " + kQuadricRays + " --p 2 --format json", &out) == 0);
    CHECK(json::parse(out).at("diagonally_f_split") == false);
    REQUIRE(run_cli("split " + kQuadricRays + " --p 5 --format json", &out) == 0);
    CHECK(json::parse(out).at("diagonally_f_split") == true);
}

TEST_CASE("signature table for the threefold") {
    const std::string cfg = write_config(
        "threefold.json",
        R"({"rays": [[1,0,0],[0,1,0],[1,0,1],[0,1,1]], "p": 3, "e_max": 1})");
    std::string out;
    REQUIRE(run_cli("fsig --config " + cfg + " --format json", &out) == 0);
    const json doc = json::parse(out);
    CHECK(doc.at("volume") == "2/3");
    CHECK(doc.at("smooth") == false);
    REQUIRE(doc.at("rows").size() == 1);
    CHECK(doc.at("rows").at(0).at("split_count") == 19);
    CHECK(doc.at("rows").at(0).at("d2_count") == 14);
    CHECK(doc.at("rows").at(0).at("d2_ratio") == "14/27");
}

TEST_CASE("oracle reports a verdict with a passing transcript") {
    std::string out;
    REQUIRE(run_cli("oracle " + kQuadricRays + " --p 5 --d \"0,0\" --format json", &out) == 0);
    const json member = json::parse(out);
    CHECK(member.at("member") == true);
    REQUIRE(member.at("transcript").size() >= 4);
    for (const auto& step : member.at("transcript")) CHECK(step.at("ok") == true);

    REQUIRE(run_cli("oracle " + kQuadricRays + " --p 5 --d \"0,-1\" --format json", &out) == 0);
    const json miss = json::parse(out);
    CHECK(miss.at("member") == false);
    for (const auto& step : miss.at("transcript")) CHECK(step.at("ok") == true);
}

TEST_CASE("volume subcommand measures a configured polytope") {
    const std::string cfg = write_config("sigvol.json", R"({"polytope": {"dim": 3, "faces": [
        {"normal": [1,0,0],  "bound": -1, "rel": ">"}, {"normal": [1,0,0],  "bound": 0, "rel": "<="},
        {"normal": [0,1,0],  "bound": -1, "rel": ">"}, {"normal": [0,1,0],  "bound": 0, "rel": "<="},
        {"normal": [1,0,1],  "bound": -1, "rel": ">"}, {"normal": [1,0,1],  "bound": 0, "rel": "<="},
        {"normal": [0,1,1],  "bound": -1, "rel": ">"}, {"normal": [0,1,1],  "bound": 0, "rel": "<="}
    ]}})");
    std::string out;
    REQUIRE(run_cli("volume --config " + cfg + " --format json", &out) == 0);
    CHECK(json::parse(out).at("volume") == "2/3");
}

TEST_CASE("text reports print points in fraction and scaled-integer form") {
    std::string out;
    REQUIRE(run_cli("d2 gens " + kQuadricRays + " --p 5", &out) == 0);
    CHECK(out.find("(-4/5, -1/5) = (1/5)*(-4, -1)") != std::string::npos);
    CHECK(out.find("(auto") != std::string::npos);

    REQUIRE(run_cli("oracle " + kQuadricRays + " --p 2 --d \"0,0\"", &out) == 0);
    CHECK(out.find("[ok]") != std::string::npos);
    CHECK(out.find("NonMember") != std::string::npos);
}

TEST_CASE("validation failures exit with status 2") {
    std::string out;
    CHECK(run_cli("d2 check --rays \"1,0;-1,0\" --p 5 --d \"0,0\"", &out) == 2);  // degenerate
    CHECK(run_cli("d2 check " + kQuadricRays + " --p 6 --d \"0,0\"", &out) == 2);  // not prime
    CHECK(run_cli("d2 check " + kQuadricRays + " --d \"0,0\"", &out) == 2);        // no p
    CHECK(run_cli("d2 check " + kQuadricRays + " --p 5 --d \"5,0\"", &out) == 2);  // boundary
    CHECK(run_cli("frobnicate", &out) == 2);                                       // unknown
    CHECK(run_cli("basis " + kQuadricRays + " --p 5", &out) == 2);                 // no box
}

TEST_CASE("resource blowups exit with status 3 under the cap override") {
    const std::string cmd = std::string("DICART_ENUM_CAP=10 ") + DICART_CLI_PATH +
                            " d2 check --rays \"1,0;-1,2\" --p 5 --d \"0,0\" 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 3);
}
