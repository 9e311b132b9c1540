#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subcode/cli.hpp"

using Json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = subcode::cli::run(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("enumerate") {
    CliResult r = run_cli({"enumerate", "--q", "2", "--m", "2"});
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 5);
    CHECK(j["subspaces"].size() == 5);
    CHECK(j["subspaces"][0] == Json::array());            // the zero subspace
    CHECK(j["subspaces"][1] == Json::parse("[[0,1]]"));   // canonical order
    CHECK(j["subspaces"][4] == Json::parse("[[1,0],[0,1]]"));

    CliResult text = run_cli({"enumerate", "--q", "2", "--m", "2", "--format", "text"});
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("0:") != std::string::npos);

    // repeated invocations are byte-identical
    CliResult again = run_cli({"enumerate", "--q", "2", "--m", "2"});
    CHECK(again.out == r.out);
}

TEST_CASE("distance") {
    CliResult r = run_cli({"distance", "--q", "2", "--m", "2", "--a", "[[0,1]]", "--b", "[[1,0]]"});
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["distance"] == 2);

    CliResult same = run_cli({"distance", "--q", "2", "--m", "2", "--a", "[]", "--b", "[]"});
    CHECK(Json::parse(same.out)["distance"] == 0);
}

TEST_CASE("bounds csv row") {
    CliResult r = run_cli({"bounds", "--q", "2", "--m", "2", "--n", "3", "--d", "2"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "q,m,n,d,classical_lower,gv_lower_ceil,hamming_upper_floor,singleton_upper,"
          "best_lower,best_upper\n"
          "2,2,3,2,25,16,125,125,25,125\n");

    CliResult sweep = run_cli({"bounds", "--q", "2", "--m", "2", "--n", "3", "--d", "1",
                               "--sweep", "6", "--format", "json"});
    REQUIRE(sweep.exit_code == 0);
    Json rows = Json::parse(sweep.out);
    CHECK(rows.size() == 6);
    CHECK(rows[0]["d"] == 1);
    CHECK(rows[5]["d"] == 6);
}

TEST_CASE("multilevel, verify, embed round trip") {
    CliResult ml = run_cli({"multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2",
                            "--component", "odd-parity"});
    REQUIRE(ml.exit_code == 0);
    Json j = Json::parse(ml.out);
    CHECK(j["count"] == 63);
    CHECK(j["min_distance"] == 2);
    CHECK(j["cutoff_level"] == 1);
    CHECK(j["cardinality_formula"] == "63");
    CHECK(j["distance_guarantee"] == 2);

    std::filesystem::path code_path = temp_file("subcode_cli_test_code.json", ml.out);
    CliResult verify = run_cli({"verify", "--code", code_path.string(), "--detect-weight", "1"});
    REQUIRE(verify.exit_code == 0);
    Json v = Json::parse(verify.out);
    CHECK(v["count"] == 63);
    CHECK(v["min_distance"] == 2);
    CHECK(v["detect"]["ok"] == true);

    CliResult embed = run_cli({"embed", "--code", code_path.string()});
    REQUIRE(embed.exit_code == 0);
    Json e = Json::parse(embed.out);
    CHECK(e["m"] == 6);
    CHECK(e["n"] == 1);
    CHECK(e["count"] == 63);
    CHECK(e["min_distance"] == 2);

    std::filesystem::remove(code_path);
}

TEST_CASE("multilevel even parity and user components") {
    CliResult even = run_cli({"multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2"});
    REQUIRE(even.exit_code == 0);
    CHECK(Json::parse(even.out)["count"] == 62);

    // a user file supplying the odd-parity component explicitly
    std::filesystem::path comp_path = temp_file(
        "subcode_cli_test_components.json",
        R"({"components":[{"alphabet":2,"words":[[0,0,1],[0,1,0],[1,0,0],[1,1,1]]}]})");
    CliResult user = run_cli({"multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2",
                              "--component", comp_path.string()});
    REQUIRE(user.exit_code == 0);
    CHECK(Json::parse(user.out)["count"] == 63);
    std::filesystem::remove(comp_path);
}

TEST_CASE("multilevel with an explicit tree file") {
    // the stock two-block tree over P(F_2^2), written out by hand
    std::filesystem::path tree_path = temp_file("subcode_cli_test_tree.json", R"({
      "q": 2, "m": 2,
      "root": {
        "subspaces": [[], [[0,1]], [[1,0]], [[1,1]], [[1,0],[0,1]]],
        "children": [
          {"label": 0, "subspaces": [[], [[1,0],[0,1]]],
           "children": [{"label": 0, "subspaces": [[]]},
                        {"label": 1, "subspaces": [[[1,0],[0,1]]]}]},
          {"label": 1, "subspaces": [[[0,1]], [[1,0]], [[1,1]]],
           "children": [{"label": 0, "subspaces": [[[0,1]]]},
                        {"label": 1, "subspaces": [[[1,0]]]},
                        {"label": 2, "subspaces": [[[1,1]]]}]}
        ]
      }
    })");
    CliResult r = run_cli({"multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2",
                           "--tree", tree_path.string()});
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["count"] == 62);
    std::filesystem::remove(tree_path);
}

TEST_CASE("search subcommand") {
    CliResult greedy = run_cli({"search", "--q", "2", "--m", "2", "--n", "3", "--d", "2",
                                "--mode", "greedy"});
    REQUIRE(greedy.exit_code == 0);
    Json g = Json::parse(greedy.out);
    CHECK(g["count"] == 62);
    CHECK(g["certificate"]["optimal"] == false);

    CliResult bnb = run_cli({"search", "--q", "2", "--m", "2", "--n", "1", "--d", "2",
                             "--mode", "bnb"});
    REQUIRE(bnb.exit_code == 0);
    Json b = Json::parse(bnb.out);
    CHECK(b["count"] == 3);
    CHECK(b["certificate"]["optimal"] == true);
}

TEST_CASE("output file and global flags after the subcommand") {
    std::filesystem::path out_path =
        std::filesystem::temp_directory_path() / "subcode_cli_test_out.json";
    CliResult r = run_cli({"enumerate", "--q", "2", "--m", "2", "--output", out_path.string()});
    REQUIRE(r.exit_code == 0);
    std::ifstream in(out_path);
    Json j = Json::parse(in);
    CHECK(j["count"] == 5);
    std::filesystem::remove(out_path);
}

TEST_CASE("exit codes") {
    CliResult usage = run_cli({"enumerate", "--m", "2"});  // missing --q
    CHECK(usage.exit_code == 2);
    CHECK(usage.err.find("usage error") != std::string::npos);

    CliResult unknown = run_cli({"frobnicate"});
    CHECK(unknown.exit_code == 2);

    CliResult domain = run_cli({"enumerate", "--q", "6", "--m", "2"});  // 6 is not a prime power
    CHECK(domain.exit_code == 1);
    CHECK(domain.err.find("error") != std::string::npos);

    CliResult help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
}
