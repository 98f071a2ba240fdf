#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gfh/cli.hpp"
#include "json.hpp"

using namespace gfh;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run_args(std::vector<const char*> args) {
    args.insert(args.begin(), "gfh");
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / ("gfh_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("invalid parameters exit with code 1") {
    const auto even = run_args({"enumerate", "--p", "2", "--e", "3", "--f", "1"});
    CHECK(even.code == cli::kInvalidParams);
    CHECK(even.err.find("p must be an odd prime") != std::string::npos);
    CHECK(run_args({"enumerate", "--p", "9", "--e", "2", "--f", "1"}).code == cli::kInvalidParams);
    CHECK(run_args({"enumerate", "--p", "3", "--e", "2", "--f", "3"}).code == cli::kInvalidParams);
    CHECK(run_args({"enumerate", "--p", "3", "--e", "1", "--f", "1"}).code == cli::kInvalidParams);
    CHECK(run_args({"fields", "--p", "3", "--e", "2", "--f", "1", "--format", "latex"}).code == cli::kInvalidParams);
    CHECK(run_args({"enumerate", "--p", "3", "--e", "2"}).code != cli::kOk);
    CHECK(run_args({"bogus"}).code != cli::kOk);
}

TEST_CASE("enumerate and orbits") {
    const auto r = run_args({"enumerate", "--p", "3", "--e", "2", "--f", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("X(1;0,1,2)\nX(1;1,1,1)\nX(1;2,2,2)\n") != std::string::npos);
    const auto o = run_args({"orbits", "--p", "7", "--e", "2", "--f", "1"});
    CHECK(o.code == cli::kOk);
    CHECK(o.out.find("orbit (1,2,4):\n  X(1;1,2,4)\n  X(1;3,5,6)\n") != std::string::npos);
}

TEST_CASE("atlas JSON") {
    const auto r = run_args({"atlas", "--p", "7", "--e", "2", "--f", "1"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["params"]["n"] == 49);
    CHECK(doc["classes"].size() == 11);
    bool found = false;
    for (const auto& c : doc["classes"]) {
        if (c["triple"] != nlohmann::json::array({1, 2, 4})) continue;
        found = true;
        CHECK(c["field"]["kind"] == "IndexThree");
        CHECK(c["field"]["degree"] == 2);
        CHECK(c["genus"] == 1128);
        CHECK(c["equations"]["weil"]["n"] == 49);
    }
    CHECK(found);
}

TEST_CASE("CSV and LaTeX formats") {
    const auto csv = run_args({"atlas", "--p", "3", "--e", "2", "--f", "2", "--format", "csv"});
    CHECK(csv.code == cli::kOk);
    CHECK(csv.out == "p,e,f,u,v,w,fieldKind,fieldDegree,orbitRep,autOrder,genus\n3,2,2,0,0,0,Rational,1,0;0;0,486,28\n");
    const auto tex = run_args({"equations", "--p", "3", "--e", "2", "--f", "2", "--format", "latex"});
    CHECK(tex.code == cli::kOk);
    CHECK(tex.out.find("y^9 = \\beta(1-\\beta)") != std::string::npos);
}

TEST_CASE("verify") {
    const auto r = run_args({"verify", "--p", "3", "--e", "2", "--f", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS  (3,2,1) classification") != std::string::npos);
}

TEST_CASE("output is independent of the worker count") {
    const auto one = run_args({"atlas", "--p", "3", "--e", "3", "--f", "2", "--workers", "1"});
    const auto four = run_args({"atlas", "--p", "3", "--e", "3", "--f", "2", "--workers", "4"});
    CHECK(one.code == cli::kOk);
    CHECK(one.out == four.out);
    CHECK(run_args({"atlas", "--p", "3", "--e", "2", "--f", "1", "--workers", "0"}).code != cli::kOk);
}

TEST_CASE("output files") {
    const auto dir = scratch_dir();
    const auto target = dir / "atlas.json";
    const auto r = run_args({"atlas", "--p", "3", "--e", "2", "--f", "1", "--output", target.c_str()});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.empty());
    CHECK(nlohmann::json::parse(slurp(target))["schema"] == "gfh-atlas/1");
    for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().extension() != ".tmp");

    const auto missing = dir / "no" / "such" / "dir" / "x.json";
    CHECK(run_args({"atlas", "--p", "3", "--e", "2", "--f", "1", "--output", missing.c_str()}).code == cli::kIoFailure);

    const auto dump = dir / "rot.txt";
    CHECK(run_args({"enumerate", "--p", "3", "--e", "2", "--f", "2", "--dump-rotation", dump.c_str()}).code == cli::kOk);
    CHECK(slurp(dump).find("# X(2;0,0,0) lift 1,1,7\nblack 0 0 9 18 ") == 0);
    fs::remove_all(dir);
}

TEST_CASE("run with a config") {
    cli::RunConfig cfg;
    cfg.command = cli::Command::Fields;
    cfg.p = 7;
    cfg.e = 2;
    cfg.f = 1;
    std::ostringstream out, err;
    CHECK(cli::run(cfg, out, err) == cli::kOk);
    CHECK(out.str().find("Q(√-7)") != std::string::npos);
}
