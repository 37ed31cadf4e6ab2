#include <set>

#include "doctest.h"
#include "dualgraph/exactdet.hpp"
#include "dualgraph/forks.hpp"
#include "test_util.hpp"

using namespace dualgraph;

namespace {
using TwigsKey = std::pair<long long, std::set<std::vector<long long>>>;
TwigsKey key_of(const Fork& f) {
    return {f.branch_weight,
            {f.twigs[0].weights, f.twigs[1].weights, f.twigs[2].weights}};
}
}  // namespace

TEST_CASE("classification") {
    Fork d4(-2, {Chain({-2}), Chain({-2}), Chain({-2})});
    auto t = classify_fork(d4);
    REQUIRE(t.has_value());
    CHECK(*t == ForkType{2, 2, 2});
    Fork a10(-2, {Chain({-2}), Chain({-3}), Chain({-2, -2, -2})});
    t = classify_fork(a10);
    REQUIRE(t.has_value());
    CHECK(*t == ForkType{2, 3, 4});
    Fork h1(-1, {Chain({-2}), Chain({-2}), Chain({-2})});
    CHECK(det(h1.to_tree()) < 0);
    CHECK_FALSE(classify_fork(h1).has_value());
    Fork t237(-2, {Chain({-2}), Chain({-3}), Chain({-7})});
    CHECK(det(t237.to_tree()) > 0);
    CHECK_FALSE(classify_fork(t237).has_value());
}

TEST_CASE("fork determinant formula") {
    CHECK(fork_determinant({2, 2, 2}, 2, {1, 1, 1}) == 4);
    CHECK(fork_determinant({2, 3, 5}, 2, {1, 2, 3}) == 7);
    // (2,2,n) closed form a = 4n(h-1) - 4 obar
    for (long long h = 2; h <= 4; ++h)
        for (long long n = 2; n <= 9; ++n)
            for (long long ob = 1; ob < n; ++ob)
                CHECK(fork_determinant({2, 2, n}, h, {1, 1, ob}) == 4 * n * (h - 1) - 4 * ob);
    // matches the assembled graph determinant
    Fork f(-2, {Chain({-2}), Chain({-3}), Chain({-2, -2, -2})});
    CHECK(fork_determinant({2, 3, 4}, 2, {1, 1, 3}) == det(f.to_tree()));
}

TEST_CASE("feasible determinants") {
    CHECK_FALSE(feasible_a(5).any());
    CHECK_FALSE(feasible_a(6).any());
    auto f10 = feasible_a(10);
    CHECK(f10.t234);
    CHECK_FALSE(f10.t233);
    CHECK_FALSE(f10.t235);
    CHECK_FALSE(f10.t22n);
    auto f4 = feasible_a(4);
    CHECK(f4.t22n);
    CHECK_FALSE(f4.t233);
    CHECK_FALSE(f4.t234);
    CHECK_FALSE(f4.t235);
    for (long long a : {18, 25, 35}) CHECK_FALSE(feasible_a(a).any());
    for (long long a = 1; a <= 60; ++a) {
        auto ft = feasible_a(a);
        if (ft.t233) CHECK(a % 3 == 0);
        if (ft.t234) {
            CHECK(a % 2 == 0);
            CHECK(a % 4 != 0);
        }
        if (ft.t235) CHECK(a % 2 == 1);
        if (ft.t22n) CHECK(a % 4 == 0);
    }
}

TEST_CASE("enumeration at a = 10 is a single fork") {
    auto recs = enumerate_forks(10, 20);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].type == ForkType{2, 3, 4});
    CHECK(recs[0].h == 2);
    CHECK(recs[0].size == 6);
    CHECK(recs[0].k_degree == 1);
    CHECK(recs[0].bark_square == Rat(-8, 5));
    CHECK(recs[0].group_order_lower_bound == 20);
}

TEST_CASE("enumeration at a = 12: one sporadic fork and two families") {
    auto fe = fork_families(12);
    REQUIRE(fe.sporadic.size() == 1);
    CHECK(fe.sporadic[0].h == 3);
    CHECK(fe.sporadic[0].type == ForkType{2, 2, 2});
    CHECK(fe.sporadic[0].bark_square == Rat(-5, 3));
    REQUIRE(fe.families.size() == 2);
    CHECK(fe.families[0].base.weights == std::vector<long long>{-4});
    CHECK(fe.families[1].base.weights == std::vector<long long>{-3, -2});
    CHECK(make_record(fe.families[0].member(0), 12).bark_square == Rat(-4, 3));
    CHECK(make_record(fe.families[1].member(2), 12).bark_square == Rat(-5, 3));
    // family members carry k extra (-2)-components before the base
    CHECK(fe.families[0].member(2).twigs[2].weights ==
          std::vector<long long>{-2, -2, -4});
}

TEST_CASE("enumeration at a = 8 and a = 16") {
    auto f8 = fork_families(8);
    CHECK(f8.sporadic.empty());
    REQUIRE(f8.families.size() == 1);
    CHECK(f8.families[0].base.weights == std::vector<long long>{-3});
    CHECK(make_record(f8.families[0].member(0), 8).bark_square == Rat(-3, 2));

    auto f16 = fork_families(16);
    REQUIRE(f16.sporadic.size() == 1);
    CHECK(f16.sporadic[0].h == 3);
    CHECK(f16.sporadic[0].bark_square == Rat(-7, 4));
    CHECK(f16.sporadic[0].size == 5);
    REQUIRE(f16.families.size() == 2);
    CHECK(f16.families[0].base.weights == std::vector<long long>{-5});
    CHECK(make_record(f16.families[0].member(1), 16).bark_square == Rat(-5, 4));
    CHECK(f16.families[1].base.weights == std::vector<long long>{-3, -2, -2});
    CHECK(make_record(f16.families[1].member(0), 16).bark_square == Rat(-7, 4));
}

TEST_CASE("every enumerated record is consistent") {
    for (long long a : {4, 7, 8, 9, 10, 11, 12, 13, 16, 19, 21, 24, 27, 31, 40}) {
        for (const auto& rec : enumerate_forks(a, 14)) {
            CHECK(det(rec.fork.to_tree()) == a);
            CHECK(bark_fork(rec.fork).square == rec.bark_square);
            CHECK(rec.group_order_lower_bound == 2 * Int(a));
            CHECK(classify_fork(rec.fork).has_value());
            for (int i = 0; i < 3; ++i)
                CHECK(chain_from_pair(rec.twig_pairs[i]) == rec.fork.twigs[i]);
        }
    }
}

TEST_CASE("enumeration is complete against brute force") {
    // Every quotient fork has a twig of determinant 2 (necessarily [-2]) and
    // one of determinant 2 or 3; the third twig runs over all admissible
    // weight vectors. Independent of the continued-fraction machinery.
    const std::vector<std::vector<long long>> second{{-2}, {-3}, {-2, -2}};
    for (long long a : {4, 8, 10, 12}) {
        const long long cap = 7;
        std::set<TwigsKey> brute;
        long long wmin = -(a + 1);
        for (long long h = 2; h <= a / 4 + 3; ++h) {
            for (const auto& w2 : second) {
                long long l3max = cap - 2 - static_cast<long long>(w2.size());
                for (long long l3 = 1; l3 <= l3max; ++l3) {
                    dgtest::enumerate_weight_vectors(
                        static_cast<int>(l3), wmin, [&](const std::vector<long long>& w3) {
                            Fork f(-h, {Chain({-2}), Chain(w2), Chain(w3)});
                            if (det(f.to_tree()) != a) return;
                            if (!classify_fork(f)) return;
                            brute.insert(key_of(f));
                        });
                }
            }
        }
        std::set<TwigsKey> fast;
        for (const auto& rec : enumerate_forks(a, cap)) fast.insert(key_of(rec.fork));
        CHECK(fast == brute);
    }
}

TEST_CASE("size cap bounds family expansion") {
    for (const auto& rec : enumerate_forks(8, 9)) CHECK(rec.size <= 9);
    CHECK(enumerate_forks(8, 9).size() == 6);  // [-3] base, k = 0..5
    CHECK_THROWS_AS(enumerate_forks(8, 3), std::invalid_argument);
}
