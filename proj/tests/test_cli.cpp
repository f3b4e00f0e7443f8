#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bgx/io.hpp"
#include "bgx/reps.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli_path() {
    const char* path = std::getenv("BGX_CLI");
    REQUIRE_MESSAGE(path != nullptr, "BGX_CLI must point at the bgx-cli binary");
    return path;
}

std::string golden_dir() {
    const char* path = std::getenv("BGX_GOLDEN_DIR");
    REQUIRE_MESSAGE(path != nullptr, "BGX_GOLDEN_DIR must point at tests/golden");
    return path;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen output is canonical JSON that round-trips byte-identically") {
    for (const std::string args :
         {"gen --rep gassner-ext --n 3", "gen --rep burau-ext --n 4",
          "gen --rep ia --n 3", "factor --rep gassner-ext --n 3",
          "factor --rep burau-ext --n 3 --spec t=2",
          "tensor --rep phi-g --n 3", "tensor --rep phi-b --n 3"}) {
        CAPTURE(args);
        const RunResult r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        const bgx::Json doc = bgx::Json::parse(r.out);
        CHECK(bgx::dump_json(doc) == r.out);
        CHECK(doc.at("schema_version") == 1);
    }
}

TEST_CASE("symbolic gen output rebuilds to the same representation") {
    const RunResult r = run_cli("gen --rep gassner-ext --n 3");
    REQUIRE(r.exit_code == 0);
    const bgx::Representation back =
        bgx::rep_from_json(bgx::Json::parse(r.out));
    const bgx::Representation direct = bgx::build_rho_g(3);
    REQUIRE(back.images.size() == direct.images.size());
    for (size_t i = 0; i < direct.images.size(); ++i) {
        CHECK(back.images[i].first == direct.images[i].first);
        CHECK(back.images[i].second == direct.images[i].second);
    }
    CHECK(bgx::dump_json(bgx::rep_to_json(back)) == r.out);
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::string args :
         {"verify --theorem T8 --t 2,3,5 --m 2,3,5",
          "irred --rep gassner-ext --n 3 --spec t1=2,t2=3,t3=5",
          "verify --theorem T4 --n 4 --seed 3"}) {
        CAPTURE(args);
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("latex output matches the frozen golden file") {
    const RunResult r = run_cli("factor --rep gassner-ext --n 3 --format latex");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == read_file(golden_dir() + "/phi_g_n3.tex"));
}

TEST_CASE("successful commands exit 0") {
    for (const std::string args :
         {"gen --rep ia --n 4", "gen --rep gassner-ext --n 2 --spec t1=2,t2=3",
          "factor --rep burau-ext --n 4",
          "tensor --rep phi-b --n 3 --t 2 --m 3",
          "irred --rep burau-ext --n 3 --spec t=2",
          "irred --rep gassner-ext --n 3 --spec t1=2,t2=3,t3=5",
          "irred --rep phi-g --n 3 --t 2,3,5 --m 2,3,7",
          "irred --rep phi-b --n 3 --t 2 --m 3",
          "verify --theorem T3 --n 3", "verify --theorem T6 --n 5",
          "verify --theorem T4 --n 3 --spec t1=1,t2=3,t3=5",
          "verify --theorem T7 --n 3 --t 2",
          "verify --theorem T9 --t 2 --m 2"}) {
        CAPTURE(args);
        CHECK(run_cli(args).exit_code == 0);
    }
}

TEST_CASE("a verified disagreement exits 1") {
    const RunResult r = run_cli("verify --theorem T7 --n 3 --t 1");
    CHECK(r.exit_code == 1);
    const bgx::Json doc = bgx::Json::parse(r.out);
    CHECK(doc.at("agrees") == false);
}

TEST_CASE("runtime failures exit 1") {
    // A zero parameter is a well-formed request that fails while running.
    CHECK(run_cli("factor --rep gassner-ext --n 3 --spec t1=0,t2=2,t3=3")
              .exit_code == 1);
    CHECK(run_cli("irred --rep burau-ext --n 3 --spec t=0").exit_code == 1);
    CHECK(run_cli("verify --theorem T9 --t 0 --m 2").exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
    for (const std::string args :
         {"frobnicate", "", "gen", "gen --rep nonsense --n 3",
          "gen --rep gassner-ext --n 1", "gen --rep gassner-ext --n 99",
          "factor --rep ia --n 3", "irred --rep phi-g --n 3",
          "irred --rep phi-g --n 3 --t 2,3,5",
          "tensor --rep gassner-ext --n 3",
          "gen --rep gassner-ext --n 3 --spec t1=2",
          "gen --rep gassner-ext --n 3 --spec t1=2,t2=x,t3=3",
          "gen --rep gassner-ext --n 3 --spec t1=2,t2=3,t3=4,t4=5",
          "verify --theorem T5", "verify --theorem nonsense",
          "verify --theorem T8 --t 2,3 --m 2,3,5",
          "gen --rep gassner-ext --n 3 --format latex --spec t1=2,t2=3,t3=4"}) {
        CAPTURE(args);
        CHECK(run_cli(args).exit_code == 2);
    }
}

TEST_CASE("help is available and exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("gen --help").exit_code == 0);
}
