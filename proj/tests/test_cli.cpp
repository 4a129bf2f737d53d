#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "kmetric/families.hpp"
#include "test_support.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& shell_command) {
    RunResult res;
    FILE* pipe = popen((shell_command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

const std::string cli = KMETRIC_CLI_PATH;

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/kmetric_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("kdim verb") {
    std::string c4 = write_temp("c4.el", kmetric::to_edge_list(kmetric::cycle_graph(4)));
    RunResult res = run(cli + " kdim " + c4);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "2\n");
}

TEST_CASE("dim verb with basis and json") {
    std::string fig2 = write_temp("fig2.el", kmetric::to_edge_list(kmetric::figure_fixture(2)));
    RunResult res = run(cli + " dim --k 3 --basis --json " + fig2);
    CHECK(res.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j["k"] == 3);
    CHECK(j["dim"] == 5);
    testsupport::OracleResult expect = testsupport::oracle_dim_k(kmetric::figure_fixture(2), 3);
    CHECK(j["basis"].get<std::vector<int>>() == expect.basis);
}

TEST_CASE("basis verb defaults to the dimensional value") {
    std::string c4 = write_temp("c4a.el", kmetric::to_edge_list(kmetric::cycle_graph(4)));
    RunResult res = run(cli + " basis " + c4);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "0 1 2 3\n");
}

TEST_CASE("gen pipes into dim") {
    RunResult res = run(cli + " gen wheel 5 | " + cli + " dim --k 4 -");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "6\n");
}

TEST_CASE("stdin equals file input") {
    std::string p6 = write_temp("p6.el", kmetric::to_edge_list(kmetric::path_graph(6)));
    RunResult from_file = run(cli + " profile --json " + p6);
    RunResult from_stdin = run("cat " + p6 + " | " + cli + " profile --json -");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == from_stdin.out);
}

TEST_CASE("graph6 output and conversion round trip") {
    RunResult g6 = run(cli + " gen figure_fixture 5 --to graph6");
    CHECK(g6.exit_code == 0);
    RunResult back = run(cli + " gen figure_fixture 5 --to graph6 | " + cli +
                         " convert - --format graph6 --to edgelist");
    CHECK(back.exit_code == 0);
    CHECK(back.out == kmetric::to_edge_list(kmetric::figure_fixture(5)));
}

TEST_CASE("tree-dim routes paths to the path formula") {
    std::string p40 = write_temp("p40.el", kmetric::to_edge_list(kmetric::path_graph(40)));
    RunResult res = run(cli + " tree-dim --r 5 --basis " + p40);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "6\n0 1 2 3 4 5\n");
}

TEST_CASE("tree-dim and branch verbs") {
    std::string fig2 = write_temp("fig2b.el", kmetric::to_edge_list(kmetric::figure_fixture(2)));
    RunResult res = run(cli + " tree-dim --r 3 " + fig2);
    CHECK(res.exit_code == 0);
    CHECK(res.out == "5\n");

    RunResult branch = run(cli + " branch --json " + fig2);
    CHECK(branch.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(branch.out);
    CHECK(j["zeta"] == 3);
    CHECK(j["mu"] == 3);
    CHECK(j["majors"].size() == 1);
}

TEST_CASE("audit verb") {
    std::string c4 = write_temp("c4b.el", kmetric::to_edge_list(kmetric::cycle_graph(4)));
    RunResult res = run(cli + " audit --json " + c4);
    CHECK(res.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j["k_max"] == 2);
    CHECK(j["checks"].is_array());
}

TEST_CASE("exit codes") {
    std::string disc = write_temp("disc.el", "4 2\n0 1\n2 3\n");
    CHECK(run(cli + " kdim " + disc).exit_code == 1);           // domain error
    CHECK(run(cli + " frobnicate x").exit_code == 2);           // usage error
    CHECK(run(cli + " dim").exit_code == 2);                    // missing input
    std::string c5 = write_temp("c5.el", kmetric::to_edge_list(kmetric::cycle_graph(5)));
    CHECK(run(cli + " dim --k 9 " + c5).exit_code == 1);        // k out of range
}

TEST_CASE("outputs are identical across thread counts") {
    std::string fig3 = write_temp("fig3.el", kmetric::to_edge_list(kmetric::figure_fixture(3)));
    RunResult one = run(cli + " --threads 1 audit --json " + fig3);
    RunResult eight = run(cli + " --threads 8 audit --json " + fig3);
    CHECK(one.exit_code == 0);
    CHECK(one.out == eight.out);
    RunResult env = run("KMETRIC_THREADS=3 " + cli + " audit --json " + fig3);
    CHECK(env.out == one.out);
}
