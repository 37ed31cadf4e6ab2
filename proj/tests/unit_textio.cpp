#include <random>

#include "doctest.h"
#include "dualgraph/exactdet.hpp"
#include "dualgraph/textio.hpp"
#include "test_util.hpp"

using namespace dualgraph;

TEST_CASE("document parsing") {
    auto g = parse_graph("chain 2 3");
    REQUIRE(std::holds_alternative<Chain>(g));
    CHECK(std::get<Chain>(g).weights == std::vector<long long>{-2, -3});

    g = parse_graph("fork h=2 twig 2 twig 3 twig 2 2 2");
    REQUIRE(std::holds_alternative<Fork>(g));
    CHECK(det(tree_of(g)) == 10);

    g = parse_graph("star b=1 twig 2 twig 3 twig 3 3");
    REQUIRE(std::holds_alternative<StarBoundary>(g));
    CHECK(det(tree_of(g)) == -10);

    g = parse_graph("tree\nv a -2\nv b 0\ne a b\n");
    REQUIRE(std::holds_alternative<WeightedTree>(g));
    CHECK(tree_of(g).self_intersection() == 0);

    CHECK(std::get<Chain>(parse_graph("chain")).empty());
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_graph("chain 2 x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 9);
    }
    CHECK_THROWS_AS(parse_graph("fork h=2 twig 2 twig 2"), ParseError);
    CHECK_THROWS_AS(parse_graph("star b=1 twig 2 twig 2"), ParseError);
    CHECK_THROWS_AS(parse_graph("blob 1 2"), ParseError);
    CHECK_THROWS_AS(parse_graph("chain 0"), ParseError);
    CHECK_THROWS_AS(parse_graph("tree\nv a -2\nv a -2"), ParseError);
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        auto c = dgtest::random_admissible_chain(rng, 6);
        auto doc = emit_graph(c);
        auto back = parse_graph(doc);
        REQUIRE(std::holds_alternative<Chain>(back));
        CHECK(std::get<Chain>(back) == c);
    }
    Fork f(-2, {Chain({-2}), Chain({-3}), Chain({-2, -2, -2})});
    auto fb = parse_graph(emit_graph(f));
    CHECK(std::get<Fork>(fb) == f);
    StarBoundary s(-1, {Chain({-2}), Chain({-3}), Chain({-3, -3})});
    auto sb = parse_graph(emit_graph(s));
    CHECK(det(tree_of(sb)) == det(s.to_tree()));
    for (int i = 0; i < 30; ++i) {
        auto t = dgtest::random_tree(rng, 9, -5, 0);
        auto tb = parse_graph(emit_graph(t));
        CHECK(det(tree_of(tb)) == det(t));
        CHECK(emit_graph(tb) == emit_graph(t));
    }
}
