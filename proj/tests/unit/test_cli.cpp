#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "atfp/cli.hpp"
#include "atfp/idp_dp.hpp"
#include "atfp/instance_io.hpp"

using namespace atfp;

namespace {

const std::string kData = ATFP_TEST_DATA_DIR;
const std::string kTmp = ATFP_TEST_TMP_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string tmp(const std::string& name) {
    std::filesystem::create_directories(kTmp);
    return kTmp + "/" + name;
}

}  // namespace

TEST_CASE("solve exit codes") {
    const auto p4 = run({"solve", data("p4.idp"), "--emit-paths"});
    CHECK(p4.code == 0);
    CHECK(p4.out.find("0 1 2 3") != std::string::npos);
    CHECK(run({"solve", data("caterpillar.idp")}).code == 1);
    CHECK(run({"solve", data("c5_two_pairs.idp")}).code == 0);
    CHECK(run({"solve", data("c6.graph")}).code == 3);
    CHECK(run({"solve", data("missing.idp")}).code == 2);

    write_file(tmp("bad_header.idp"), "4 3\n0 1\n1 2\n2 3\n");
    const auto bad = run({"solve", tmp("bad_header.idp")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 1") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json reports are byte-identical across runs") {
    const auto a = run({"solve", data("c5_two_pairs.idp"), "--json", "--seed", "3"});
    const auto b = run({"solve", data("c5_two_pairs.idp"), "--json", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"answer\": \"yes\"") != std::string::npos);
    CHECK(a.out.find("wall_ms") == std::string::npos);
    CHECK(run({"solve", data("c5_two_pairs.idp"), "--json", "--timing"}).out.find("wall_ms") != std::string::npos);
}

TEST_CASE("check-atfree") {
    const auto c6 = run({"check-atfree", data("c6.graph")});
    CHECK(c6.code == 1);
    CHECK(c6.out.find("0 2 4") != std::string::npos);
    CHECK(run({"check-atfree", data("c5.graph")}).code == 0);
}

TEST_CASE("oracle and derived solvers") {
    CHECK(run({"oracle", "idp", data("p4.idp")}).code == 0);
    CHECK(run({"oracle", "idp", data("caterpillar.idp")}).code == 1);
    CHECK(run({"oracle", "cycle", data("c5_two_pairs.idp")}).code == 0);
    CHECK(run({"oracle", "idp", data("p4.idp"), "--max-n", "3"}).code == 3);
    CHECK(run({"oracle", "nope", data("p4.idp")}).code == 2);
    CHECK(run({"kpath", data("p4.idp")}).code == 0);
    CHECK(run({"ktree", data("caterpillar.idp")}).code == 0);
    CHECK(run({"kcycle", data("p4.idp")}).code == 1);
    CHECK(run({"kpath", data("c6.graph")}).code == 3);
    CHECK(run({"coinciding", data("c5.graph"), "--s", "0", "--t", "2", "--k", "1"}).code == 0);
    CHECK(run({"coinciding", data("c5.graph"), "--s", "0", "--t", "2", "--k", "3"}).code == 1);
    CHECK(run({"coinciding", data("c5.graph"), "--s", "0", "--t", "0", "--k", "1"}).code == 3);
}

TEST_CASE("itm") {
    CHECK(run({"itm", data("c5.graph"), data("k3.graph")}).code == 0);
    CHECK(run({"itm", data("p4.graph"), data("k3.graph")}).code == 1);
    CHECK(run({"itm", data("c5.graph"), data("k3.graph"), "--anchors", "0,2,4"}).code == 0);
    CHECK(run({"itm", data("c5.graph"), data("k3.graph"), "--anchors", "0,1,2"}).code == 0);
    CHECK(run({"itm", data("p4.graph"), data("k3.graph"), "--anchors", "0,1,3"}).code == 1);
    CHECK(run({"itm", data("c5.graph"), data("k3.graph"), "--anchors", "0,x"}).code == 2);
    CHECK(run({"itm", data("c5.graph"), data("k3.graph"), "--budget", "2"}).code == 3);
}

TEST_CASE("gen and verify") {
    const auto a = run({"gen", "interval", "--n", "8", "--k", "2", "--seed", "1"});
    const auto b = run({"gen", "interval", "--n", "8", "--k", "2", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_instance(a.out).pairs.size() == 2);
    CHECK_FALSE(std::filesystem::exists("fuzz_reproducer.idp"));
    CHECK(run({"gen", "interval", "--n", "3", "--k", "2"}).code == 3);

    const std::string inst = tmp("gen.idp");
    CHECK(run({"gen", "cobipartite", "--n", "9", "--k", "2", "--seed", "4", "-o", inst}).code == 0);
    const auto solved = run({"solve", inst, "--emit-paths"});
    if (solved.code == 0) {
        // "answer: yes", then one line per pair.
        std::istringstream lines(solved.out);
        std::string line, sol;
        std::getline(lines, line);
        for (int i = 0; i < 2 && std::getline(lines, line); ++i) sol += line + "\n";
        write_file(tmp("gen.sol"), sol);
        CHECK(run({"verify", inst, tmp("gen.sol")}).code == 0);
    }
    write_file(tmp("p4_wrong.sol"), "0 1 2\n");
    CHECK(run({"verify", data("p4.idp"), tmp("p4_wrong.sol")}).code == 1);
    write_file(tmp("p4_right.sol"), "0 1 2 3\n");
    CHECK(run({"verify", data("p4.idp"), tmp("p4_right.sol")}).code == 0);

    CHECK(run({"gen", "hardness", "--graph", data("k3.graph"), "--k", "5", "--pad", "2", "-o", tmp("h.graph"),
               "--pattern-out", tmp("h.pattern")})
              .code == 0);
    const auto host = parse_instance(read_file(tmp("h.graph")));
    CHECK(host.g.n() == 5 + 10);
    CHECK(parse_instance(read_file(tmp("h.pattern"))).g.n() == 15);
    CHECK(run({"gen", "hardness", "--graph", data("k3.graph"), "--k", "5"}).code == 3);
}

TEST_CASE("fuzz") {
    const auto a = run({"fuzz", "--trials", "40", "--seed", "2", "-o", tmp("repro.idp")});
    const auto b = run({"fuzz", "--trials", "40", "--seed", "2", "--workers", "2", "-o", tmp("repro.idp")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
