#include "doctest.h"
#include "dualgraph/graph.hpp"

using namespace dualgraph;

TEST_CASE("to_tree shapes and counts") {
    CHECK(Chain().to_tree().size() == 0);
    auto t = Chain({-2, -3}).to_tree();
    CHECK(t.size() == 2);
    CHECK(t.edges().size() == 1);
    CHECK(t.weight(0) == -2);
    CHECK(t.weight(1) == -3);

    StarBoundary s(-1, {Chain({-2}), Chain({-3}), Chain({-3, -3})});
    auto st = s.to_tree();
    CHECK(st.size() == 5);
    CHECK(st.edges().size() == 4);
    CHECK(st.branching_number(0) == 3);

    Fork f(-2, {Chain({-2}), Chain({-3}), Chain({-2, -2, -2})});
    auto ft = f.to_tree();
    CHECK(ft.size() == 6);
    int branching = 0;
    for (const auto& v : ft.vertices())
        if (ft.branching_number(v.id) == 3) ++branching;
    CHECK(branching == 1);
}

TEST_CASE("chains have no branching vertices") {
    for (int len = 0; len <= 6; ++len) {
        std::vector<long long> ws(len, -2);
        auto t = Chain(ws).to_tree();
        for (const auto& v : t.vertices()) CHECK(t.branching_number(v.id) <= 2);
    }
}

TEST_CASE("canonical degree") {
    CHECK(WeightedTree::path({-2}).canonical_degree() == 0);
    Fork e(-2, {Chain({-2}), Chain({-3}), Chain({-2, -2, -2})});
    CHECK(e.to_tree().canonical_degree() == 1);
    StarBoundary s(-1, {Chain({-2}), Chain({-3}), Chain({-3, -3})});
    CHECK(s.to_tree().canonical_degree() == 2);
    // additivity over the center and twigs
    long long total = (-2 - e.branch_weight);
    for (const auto& tw : e.twigs) total += tw.to_tree().canonical_degree();
    CHECK(total == e.to_tree().canonical_degree());
}

TEST_CASE("self intersection") {
    CHECK(WeightedTree().self_intersection() == 0);
    CHECK(WeightedTree::path({-5}).self_intersection() == -5);
    CHECK(WeightedTree::path({-2, -2}).self_intersection() == -2);
}

TEST_CASE("blow down") {
    auto t = WeightedTree::path({-2, -1, -2});
    auto u = t.blow_down(1);
    CHECK(u.size() == 2);
    CHECK(u.weight(0) == -1);
    CHECK(u.weight(2) == -1);
    CHECK(u.edges().size() == 1);

    auto single = WeightedTree::path({-1});
    CHECK(single.blow_down(0).empty());

    auto p = WeightedTree::path({-1, -2, -2});
    auto q = p.blow_down(0);
    CHECK(q.size() == 2);
    CHECK(q.weight(1) == -1);
    CHECK(q.weight(2) == -2);

    CHECK_THROWS_AS(WeightedTree::path({-2, -2}).blow_down(0), std::invalid_argument);
    StarBoundary s(-1, {Chain({-2}), Chain({-2}), Chain({-2})});
    CHECK_THROWS_AS(s.to_tree().blow_down(0), std::invalid_argument);
}

TEST_CASE("iterated blow down terminates and shrinks by one") {
    // a (-2)-chain with one weight set to -1 contracts to nothing
    auto t = WeightedTree::path({-1, -2, -2, -2, -2});
    while (!t.empty()) {
        bool found = false;
        for (const auto& v : t.vertices()) {
            if (v.weight == -1 && t.branching_number(v.id) <= 2) {
                auto next = t.blow_down(v.id);
                CHECK(next.size() == t.size() - 1);
                t = next;
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }
    CHECK(t.empty());
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(WeightedTree({{0, -2}, {1, -2}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedTree({{0, -2}, {0, -2}}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(StarBoundary(-1, {Chain({-2}), Chain({-2})}), std::invalid_argument);
    CHECK_THROWS_AS(Fork(-2, {Chain(), Chain({-2}), Chain({-2})}), std::invalid_argument);
}
