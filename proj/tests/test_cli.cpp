#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef SELFDUAL_CLI
#error "SELFDUAL_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SELFDUAL_CLI) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/selfdual_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("classify exit codes are a stable contract") {
    const std::string tog = write_temp(
        "tog.txt", "0 0\n1 0\n0 1\n2 1\n1 2\n2 2\n");
    CHECK(run("classify -k 2 --input " + tog).exit_code == 0);

    const std::string cone = write_temp(
        "cone.txt", "1 0\n0 0\n0 1\n0 2\n0 3\n");
    auto r = run("classify -k 1 --input " + cone);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("not 1-selfdual") != std::string::npos);

    const std::string bad = write_temp("bad.txt", "0 0\n1\n");
    CHECK(run("classify -k 2 --input " + bad).exit_code == 2);
    CHECK(run("classify -k 2 --input /no/such/file").exit_code == 2);
}

TEST_CASE("classify --format json round-trips through re-classification") {
    const std::string tog = write_temp(
        "tog2.txt", "0 0\n1 0\n0 1\n2 1\n1 2\n2 2\n");
    auto first = run("classify -k 2 --format json --crosscheck --seed 5 --input " + tog);
    REQUIRE(first.exit_code == 0);
    auto j = nlohmann::json::parse(first.out);
    CHECK(j["verdict"]["selfdual"] == true);
    CHECK(j["verdict"]["dual_dim_check"]["agrees_with_verdict"] == true);
    CHECK(j["manifest"]["command"] == "classify");

    // Feed the emitted report back in as input.
    const std::string again = write_temp("tog3.json", first.out);
    auto second = run("classify -k 2 --format json --crosscheck --seed 5 --input " + again);
    REQUIRE(second.exit_code == 0);
    auto j2 = nlohmann::json::parse(second.out);
    CHECK(j2["verdict"] == j["verdict"]);
}

TEST_CASE("hilbert table") {
    const std::string seg = write_temp("seg.txt", "0\n1\n2\n3\n");
    auto r = run("hilbert --k-max 4 --format json --input " + seg);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["values"] == nlohmann::json({2, 3, 4, 4}));

    const std::string grid = write_temp(
        "grid.txt", "0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n");
    auto g = run("hilbert --k-max 4 --format json --input " + grid);
    CHECK(nlohmann::json::parse(g.out)["values"] ==
          nlohmann::json({3, 6, 8, 9}));
}

TEST_CASE("generate piped into classify") {
    auto gen = run("generate --family box --lengths 2,2");
    REQUIRE(gen.exit_code == 0);
    const std::string path = write_temp("box.txt", gen.out);
    CHECK(run("classify -k 3 --input " + path).exit_code == 0);

    auto fix = run("generate --family fixture --name figure1 --format json");
    REQUIRE(fix.exit_code == 0);
    const std::string fpath = write_temp("fig1.json", fix.out);
    CHECK(run("classify -k 1 --input " + fpath).exit_code == 0);

    CHECK(run("generate --family nonsense").exit_code == 2);
    auto rg = run("generate --family random_general --n 2 --k 2 --seed 9 "
                  "--box-size 10 --format json");
    REQUIRE(rg.exit_code == 0);
    auto j = nlohmann::json::parse(rg.out);
    CHECK(j["configuration"]["points"].size() == 7);
}

TEST_CASE("search finds the classical six-point configurations") {
    auto r = run("search --box 2,2 --size 6 -k 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["examined"] == 84);
    CHECK(j["selfdual_count"] == 8);
    CHECK(j["hits"].size() == 8);

    auto dedup = run("search --box 2,2 --size 6 -k 2 --dedup --format json");
    auto jd = nlohmann::json::parse(dedup.out);
    CHECK(jd["hits"].size() == 3);
}

TEST_CASE("verify-paper") {
    auto r = run("verify-paper --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["notes"].size() == 3);

    // A corrupted expectation fails and is named.
    auto bad = run("verify-paper --inject-failure \"figure1 k=1 selfdual\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL  figure1 k=1 selfdual") != std::string::npos);
}

TEST_SUITE_END();
