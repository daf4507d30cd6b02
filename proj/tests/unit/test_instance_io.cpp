#include <doctest.h>

#include <json.hpp>
#include <random>

#include "atfp/errors.hpp"
#include "atfp/generators.hpp"
#include "atfp/instance_io.hpp"
#include "fixtures.hpp"

using namespace atfp;

namespace {

std::pair<std::size_t, std::size_t> parse_error_at(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("no ParseError for: " << text);
    return {0, 0};
}

}  // namespace

TEST_CASE("parse_instance") {
    const auto p4 = parse_instance("4 3 1\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(p4.g == fx::path(4));
    CHECK(p4.pairs == std::vector<TerminalPair>{{0, 3}});

    const auto empty = parse_instance("0 0 0\n");
    CHECK(empty.g.n() == 0);
    CHECK(empty.pairs.empty());

    CHECK(parse_error_at("4 3\n0 1\n1 2\n2 3\n").first == 1);
    CHECK(parse_instance("# comment\n\n2 1 1\n# another\n0 1\n\t1   0 \n").pairs == std::vector<TerminalPair>{{1, 0}});
    CHECK(parse_error_at("2 1 0\n0 2\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(parse_error_at("2 1 0\n1 1\n").first == 2);
    CHECK(parse_error_at("2 1 0\n0 x\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(parse_error_at("3 1 0\n0 1\n1 2\n").first == 3);
    CHECK(parse_error_at("3 2 0\n0 1\n").first > 0);
    CHECK(parse_error_at("").first == 1);
    CHECK_THROWS_AS(parse_instance("3 0 2\n0 1\n1 0\n"), InvalidInstance);
}

TEST_CASE("serialize_instance round trip") {
    CHECK(serialize_instance(fx::p4_single()) == "4 3 1\n0 1\n1 2\n2 3\n0 3\n");
    const auto messy = parse_instance("3 2 1\n2 1\n1 0\n2 0\n");
    CHECK(serialize_instance(messy) == "3 2 1\n0 1\n1 2\n2 0\n");
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = gen_random(static_cast<GraphModel>(trial % 4), 8, 3, static_cast<std::uint64_t>(trial));
        const auto text = serialize_instance(inst);
        const auto back = parse_instance(text);
        CHECK(back.g == inst.g);
        CHECK(back.pairs == inst.pairs);
        CHECK(serialize_instance(back) == text);
    }
}

TEST_CASE("paths text") {
    const std::vector<VertexSeq> paths{{0, 1, 2}, {2, 3, 4}};
    CHECK(serialize_paths(paths) == "0 1 2\n2 3 4\n");
    CHECK(parse_paths("0 1 2\n\n2 3 4\n") == paths);
    CHECK(parse_paths("") .empty());
    CHECK_THROWS_AS(parse_paths("0 a\n"), ParseError);
}

TEST_CASE("reports") {
    ResultReport r;
    r.solver = "idp-dp";
    r.seed = 7;
    r.yes = true;
    r.paths = {{0, 1, 2, 3}};
    r.stats.n = 4;
    r.stats.m = 3;
    r.stats.k = 1;
    const auto text = report_json(r);
    const auto doc = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [key, value] : doc.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"answer", "paths", "stats", "solver", "seed"});
    CHECK(doc["answer"] == "yes");
    CHECK(doc["paths"][0] == nlohmann::json::array({0, 1, 2, 3}));
    CHECK_FALSE(doc["stats"].contains("wall_ms"));
    CHECK(report_json(r) == text);

    r.wall_ms = 1.5;
    CHECK(nlohmann::json::parse(report_json(r))["stats"]["wall_ms"] == 1.5);

    r.yes = false;
    r.wall_ms.reset();
    CHECK_FALSE(nlohmann::json::parse(report_json(r)).contains("paths"));
    CHECK(report_text(r, true).find("no") != std::string::npos);
}
