#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tdom/graph.hpp"
#include "tdom/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "tdom_cli_tests";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out_path = work_dir() / "stdout.txt";
    const std::string command =
        std::string(TDOM_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    int status = std::system(command.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    return res;
}

std::string file_with(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream(p) << content;
    return p.string();
}

const std::string c4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";

}  // namespace

TEST_CASE("cli analyze") {
    auto res = run_cli("analyze " + file_with("c4.txt", c4));
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.out);
    CHECK(doc["min_domination"] == 1);
    CHECK(doc["is_threshold"] == false);
    CHECK(doc["forbidden_witnesses"]["C4"].size() == 4);
}

TEST_CASE("cli analyze exit codes on malformed input") {
    CHECK(run_cli("analyze " + file_with("bad.txt", "not a graph\n")).exit_code == 2);
    CHECK(run_cli("analyze " + (work_dir() / "missing.txt").string()).exit_code == 2);
}

TEST_CASE("cli repair") {
    const std::string input = file_with("c4r.txt", c4);
    const std::string out = (work_dir() / "c4r.out").string();
    auto res = run_cli("repair " + input + " --t 1 --out " + out);
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.out);
    CHECK(doc["stage_diffs"]["total"] == 2);
    CHECK(doc["verified"]["output_threshold"] == true);
    std::ifstream repaired(out);
    std::stringstream ss;
    ss << repaired.rdbuf();
    CHECK(ss.str() == "4 0\n");

    CHECK(run_cli("repair " + input + " --t 0").exit_code == 2);
}

TEST_CASE("cli repair of a threshold input is the identity") {
    auto res = run_cli("gen threshold --n 15 --seed 3");
    CHECK(res.exit_code == 0);
    const std::string path = file_with("t15.txt", res.out);
    auto rep = run_cli("repair " + path + " --t 2 --verify full --out " + path + ".r");
    CHECK(rep.exit_code == 0);
    auto doc = json::parse(rep.out);
    CHECK(doc["stage_diffs"]["total"] == 0);
}

TEST_CASE("cli gen round-trips through analyze") {
    const std::string path = (work_dir() / "t20.txt").string();
    CHECK(run_cli("gen threshold --n 20 --seed 7 --out " + path).exit_code == 0);
    auto res = run_cli("analyze " + path);
    CHECK(json::parse(res.out)["is_threshold"] == true);
    CHECK(json::parse(res.out)["min_domination"] == 0);
}

TEST_CASE("cli matrix repair of the padded staircase") {
    const std::string stair = (work_dir() / "stair8.txt").string();
    CHECK(run_cli("gen stair --n 8 --out " + stair).exit_code == 0);
    auto res = run_cli("matrix " + stair + " --t 1 --verify full --out " + stair + ".r");
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.out);
    CHECK(doc["bound"] == 644);
    CHECK(doc["verified"]["inclusive"] == true);
    CHECK(doc["verified"]["bound_holds"] == true);
}

TEST_CASE("cli counterexample with oracle") {
    const std::string out = (work_dir() / "g2.txt").string();
    auto res = run_cli("counterexample --k 2 --oracle --out " + out);
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.out);
    CHECK(doc["k"] == 2);
    CHECK(doc["nested_t"] == 1);
    CHECK(doc["degree_bounds_ok"] == true);
    CHECK(doc["oracle_distance"] >= 2);

    // The emitted file parses back to a graph of the right shape.
    auto g = tdom::read_bipartite_file(out);
    CHECK(g.a_count() == 51);
    CHECK(g.b_count() == 4);
}

TEST_CASE("cli bounds") {
    const std::string k2 = file_with("k2.txt", "2 1\n0 1\n");
    const std::string e2 = file_with("e2.txt", "2 0\n");
    const std::string k1 = file_with("k1.txt", "1 0\n");
    auto res = run_cli("bounds --h1 " + k2 + " --h2 " + e2 + " --g " + k1);
    CHECK(res.exit_code == 0);
    auto doc = json::parse(res.out);
    CHECK(doc["m"] == 4);
    CHECK(doc["k"] == 4);
    CHECK(doc["bound"] == 15);
    CHECK(doc["holds"] == true);
}

TEST_CASE("cli matrix rejects an under-restricted input") {
    // The antidiagonal needs t >= 2.
    const std::string path = file_with("wild.txt", "4 4\n1100\n0011\n1100\n0011\n");
    CHECK(run_cli("matrix " + path + " --t 1").exit_code == 2);
    CHECK(run_cli("matrix " + path + " --t 2 --out " + path + ".r").exit_code == 0);
}

TEST_CASE("cli report flag duplicates stdout into a file") {
    const std::string input = file_with("c4rep.txt", c4);
    const std::string report = (work_dir() / "report.json").string();
    auto res = run_cli("analyze " + input + " --report " + report);
    CHECK(res.exit_code == 0);
    std::ifstream in(report);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == res.out);
}

TEST_CASE("cli oracle commands") {
    const std::string c4p = file_with("c4o.txt", c4);
    auto res = run_cli("oracle threshold-distance " + c4p);
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["value"] == 1);

    const std::string row = file_with("row.txt", "1 4\n1100\n");
    auto mono = run_cli("oracle monotone-distance " + row);
    CHECK(json::parse(mono.out)["value"] == 2);

    auto bad = run_cli("oracle nonsense " + row);
    CHECK(bad.exit_code == 2);
}
