// End-to-end checks of the command-line binary: spawns the real executable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/hhcenter-cli-XXXXXX";
        return std::string(mkdtemp(tmpl));
    }();
    return dir;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    RunResult res;
    std::string out_path = temp_dir() + "/stdout.txt";
    std::string cmd = env + " " + std::string(HHC_CLI_PATH) + " " + args + " > " + out_path +
                      " 2> " + temp_dir() + "/stderr.txt";
    int rc = std::system(cmd.c_str());
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.out = slurp(out_path);
    return res;
}

const char* kTriangle = R"({"type":"polygon2","vertices":[[0,-0.5],[1,0],[0,0.5]]})";
const char* kFx = R"({"type":"affine","gradient":[1,0],"offset":0})";
const char* kCube =
    R"({"type":"polytope3","vertices":[[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]})";

struct Fixtures {
    Fixtures() {
        write_file(temp_dir() + "/tri.json", kTriangle);
        write_file(temp_dir() + "/fx.json", kFx);
        write_file(temp_dir() + "/cube.json", kCube);
        write_file(temp_dir() + "/bad.json", "{not json");
    }
};
Fixtures fixtures;

}  // namespace

TEST_CASE("center command on the sharp triangle") {
    RunResult res = run_cli("center --body " + temp_dir() + "/tri.json --function " + temp_dir() +
                            "/fx.json");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["point"][0].get<double>() == doctest::Approx(0.29289321881).epsilon(1e-9));
    CHECK(j["point"][1].get<double>() == doctest::Approx(0.0));
    CHECK(j["cone"]["t_R"].get<double>() == doctest::Approx(0.29289321881).epsilon(1e-9));
}

TEST_CASE("bound command reports absolute and per-volume values") {
    RunResult res = run_cli("bound --body " + temp_dir() + "/tri.json --function ", "");
    CHECK(res.exit_code != 0);  // missing argument value
    res = run_cli("bound --body " + temp_dir() + "/tri.json --function " + temp_dir() +
                  "/fx.json --phi power --alpha 1 --per-volume --trace-csv " + temp_dir() +
                  "/trace.csv");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["report"]["bound"].get<double>() == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(j["bound_per_volume"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    std::string csv = slurp(temp_dir() + "/trace.csv");
    CHECK(csv.rfind("m,F\n", 0) == 0);
    CHECK(csv.find(',') != std::string::npos);
}

TEST_CASE("malformed input exits with code 2") {
    RunResult res = run_cli("center --body " + temp_dir() + "/bad.json --function " + temp_dir() +
                            "/fx.json");
    CHECK(res.exit_code == 2);
}

TEST_CASE("degenerate geometry exits with code 3") {
    write_file(temp_dir() + "/flat.json",
               R"({"type":"polygon2","vertices":[[0,0],[1,0],[2,0],[1,1]]})");
    RunResult res = run_cli("center --body " + temp_dir() + "/flat.json --function " +
                            temp_dir() + "/fx.json");
    CHECK(res.exit_code == 3);
}

TEST_CASE("start point override is honored") {
    write_file(temp_dir() + "/roof.json",
               R"({"type":"min-affine","pieces":[{"gradient":[1,0],"offset":0.5},
                   {"gradient":[-1,0],"offset":1.5}]})");
    RunResult left = run_cli("center --body " + temp_dir() + "/tri.json --function " +
                             temp_dir() + "/roof.json --start-point=0.1,0");
    RunResult right = run_cli("center --body " + temp_dir() + "/tri.json --function " +
                              temp_dir() + "/roof.json --start-point=0.9,0");
    REQUIRE(left.exit_code == 0);
    REQUIRE(right.exit_code == 0);
    json jl = json::parse(left.out), jr = json::parse(right.out);
    CHECK(jl["direction"][0].get<double>() == doctest::Approx(1.0));
    CHECK(jr["direction"][0].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("invalid gauge exponent exits with code 2") {
    RunResult res = run_cli("bound --body " + temp_dir() + "/tri.json --function " + temp_dir() +
                            "/fx.json --phi power --alpha 0.5");
    CHECK(res.exit_code == 2);
}

TEST_CASE("alpha rejected for non-power gauges") {
    RunResult res = run_cli("bound --body " + temp_dir() + "/tri.json --function " + temp_dir() +
                            "/fx.json --phi exp --alpha 2");
    CHECK(res.exit_code == 2);
}

TEST_CASE("verify runs a seed range and emits one record per seed") {
    RunResult res = run_cli("verify --seeds 1..10 --dim 2 --phi power --alpha 2");
    REQUIRE(res.exit_code == 0);
    int lines = 0;
    std::istringstream is(res.out);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ++lines;
        json j = json::parse(line);
        CHECK(j["status"] != "violation");
        CHECK(j.contains("seed"));
    }
    CHECK(lines == 10);
}

TEST_CASE("verify output is byte-identical across runs and thread counts") {
    RunResult a = run_cli("verify --seeds 3..8 --dim 2 --phi exp", "HHC_THREADS=1");
    RunResult b = run_cli("verify --seeds 3..8 --dim 2 --phi exp", "HHC_THREADS=3");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("empty seed range exits with code 2") {
    RunResult res = run_cli("verify --seeds 5..4 --dim 2 --phi power --alpha 1");
    CHECK(res.exit_code == 2);
    res = run_cli("verify --seeds nonsense --dim 2");
    CHECK(res.exit_code == 2);
}

TEST_CASE("section-bound on the cube") {
    RunResult res = run_cli("section-bound --body " + temp_dir() + "/cube.json --plane all");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("\"status\": \"ok\"") != std::string::npos);
}

TEST_CASE("repro prints the flagged constants table") {
    RunResult res = run_cli("repro");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("Thm 1.2 (alpha=1)") != std::string::npos);
    CHECK(res.out.find("1.1380712") != std::string::npos);
    CHECK(res.out.find("FLAG") != std::string::npos);
    CHECK(res.out.find("14.54") != std::string::npos);
    RunResult twice = run_cli("repro");
    CHECK(res.out == twice.out);
    RunResult as_json = run_cli("repro --format json");
    REQUIRE(as_json.exit_code == 0);
    json rows = json::parse(as_json.out);
    CHECK(rows.size() >= 13);
}

TEST_CASE("unknown subcommand exits with an input error") {
    RunResult res = run_cli("frobnicate");
    CHECK(res.exit_code == 2);
}
