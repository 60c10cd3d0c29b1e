#include <catch2/catch_amalgamated.hpp>

#include "phatic/parser.hpp"
#include "phatic/reachability.hpp"

using namespace phatic;

static Program chain_program() {
    auto r = parse_program(
        "rule first: a -o b.\n"
        "rule second: b -o c.\n"
        "rule third: c -o d.\n"
        "rule orphan: zz -o zz.\n");
    REQUIRE(r.ok());
    return *r.program;
}

TEST_CASE("depth zero reaches nothing") {
    State init;
    init.insert(atom("a"));
    auto flags = check_reachability(chain_program(), init, 0);
    for (const auto& [name, reachable] : flags) CHECK_FALSE(reachable);
}

TEST_CASE("depth peels the chain one rule per step") {
    State init;
    init.insert(atom("a"));
    Program p = chain_program();

    auto d1 = check_reachability(p, init, 1);
    CHECK(d1 == std::map<std::string, bool>{
                    {"first", true}, {"second", false}, {"third", false}, {"orphan", false}});

    auto d2 = check_reachability(p, init, 2);
    CHECK(d2.at("first"));
    CHECK(d2.at("second"));
    CHECK_FALSE(d2.at("third"));

    auto d3 = check_reachability(p, init, 3);
    CHECK(d3.at("third"));
    CHECK_FALSE(d3.at("orphan"));  // zz occurs in no initial atom and no effect
}

TEST_CASE("reachability is monotone in depth") {
    State init;
    init.insert(atom("a"));
    Program p = chain_program();
    auto prev = check_reachability(p, init, 0);
    for (int depth = 1; depth <= 5; ++depth) {
        auto cur = check_reachability(p, init, depth);
        for (const auto& [name, reachable] : prev)
            if (reachable) CHECK(cur.at(name));
        prev = cur;
    }
}

TEST_CASE("gating tokens keep later rules out of shallow depths") {
    auto r = parse_program(
        "rule hello1: stage1 -o stage2.\n"
        "rule hello2: stage2 -o go * go.\n"
        "rule talk: go * go -o done.\n");
    REQUIRE(r.ok());
    State init;
    init.insert(atom("stage1"));
    auto d2 = check_reachability(*r.program, init, 2);
    CHECK(d2.at("hello2"));
    CHECK_FALSE(d2.at("talk"));
    auto d3 = check_reachability(*r.program, init, 3);
    CHECK(d3.at("talk"));
}

TEST_CASE("state budget is enforced") {
    auto r = parse_program("rule dup: t -o t * t.");
    REQUIRE(r.ok());
    State init;
    init.insert(atom("t"));
    CHECK_THROWS_AS(check_reachability(*r.program, init, 12, 5), BudgetExceeded);
}

TEST_CASE("depth bound is validated") {
    State init;
    CHECK_THROWS_AS(check_reachability(chain_program(), init, 13), std::invalid_argument);
    CHECK_THROWS_AS(check_reachability(chain_program(), init, -1), std::invalid_argument);
}
