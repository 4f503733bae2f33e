#include <doctest.h>

#include "semimap/classify.hpp"
#include "semimap/params.hpp"

using namespace semimap;

TEST_CASE("keys") {
    CHECK(invariant_key(RepParams{TileType::T33344, 6, 2, 2}) == invariant_key(RepParams{TileType::T33344, 6, 2, 3}));
    CHECK(invariant_key(RepParams{TileType::T33344, 3, 4, 0}) != invariant_key(RepParams{TileType::T33344, 3, 4, 2}));
    auto k = invariant_key(RepParams{TileType::T3464, 9, 2, 4});
    CHECK(k.pairs == std::vector<std::pair<int, int>>{{9, 6}, {9, 6}, {9, 6}});
    CHECK_FALSE(k.a1);
    auto k1 = invariant_key(RepParams{TileType::T33344, 5, 2, 2});
    CHECK(k1.a1 == 5);
    CHECK(k1.pairs == std::vector<std::pair<int, int>>{{10, 4}, {10, 4}});
    // mixed r in one class
    CHECK(invariant_key(RepParams{TileType::T33434, 12, 2, 6}) == invariant_key(RepParams{TileType::T33434, 4, 6, 2}));
    CHECK_THROWS_AS(invariant_key(RepParams{TileType::T33344, 4, 2, 1}), std::invalid_argument);
}

TEST_CASE("canonical k") {
    CHECK(canonical_k({TileType::T33344, 7, 2, 4}).k == 2);
    CHECK(canonical_k({TileType::T33344, 5, 4, 4}).k == 4);
    CHECK(canonical_k({TileType::T33344, 3, 4, 1}).k == 0);
    CHECK(canonical_k({TileType::T3464, 9, 2, 4}).k == 4);
    for (int n = 1; n <= 60; ++n)
        for (const auto& p : admissible_triples(TileType::T33344, n)) {
            auto c = canonical_k(p);
            CHECK(canonical_k(c) == c);
            CHECK(invariant_key(p) == invariant_key(c));
        }
}

TEST_CASE("classify") {
    CHECK(classify(TileType::T33344, 16).classes.size() == 5);
    auto c = classify(TileType::T4612, 60);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].members == std::vector<RepParams>{{TileType::T4612, 30, 2, 9},
                                                         {TileType::T4612, 30, 2, 15},
                                                         {TileType::T4612, 30, 2, 21}});
    for (const auto& cl : classify(TileType::T3464, 48).classes)
        for (size_t i = 1; i < cl.members.size(); ++i) CHECK(srk_less(cl.members[i - 1], cl.members[i]));
}

TEST_CASE("catalog") {
    auto cat = build_catalog(TileType::T33434, 32);
    CHECK(cat.obj_counts == std::map<int, int>{{16, 2}, {20, 1}, {24, 3}, {28, 1}, {32, 5}});
    CHECK(build_catalog(TileType::T4612, 35).by_n.empty());
    CHECK(build_catalog(TileType::T488, 19).obj_counts.empty());
    auto c = build_catalog(TileType::T488, 24);
    CHECK(c.obj_counts.at(20) == 1);
}

TEST_CASE("parallel classification matches serial") {
    for (auto t : {TileType::T3464, TileType::T33336})
        for (int n : {36, 48}) {
            auto a = classify(t, n, 1), b = classify(t, n, 4);
            REQUIRE(a.classes.size() == b.classes.size());
            for (size_t i = 0; i < a.classes.size(); ++i) {
                CHECK(a.classes[i].key == b.classes[i].key);
                CHECK(a.classes[i].members == b.classes[i].members);
            }
        }
}

TEST_CASE("non-polyhedral triples are reported") {
    auto c = classify(TileType::T31212, 36);
    CHECK(c.classes.empty());
    CHECK(c.rejected.size() == 2);
}

#include "semimap/report.hpp"

TEST_CASE("key partition equals certificate partition over every polyhedral triple") {
    for (auto t : kAllTypes) {
        const auto& ti = info(t);
        for (int n = 1; n <= 96; ++n) {
            std::vector<RepParams> all;
            for (int s = 1; s <= n; ++s) {
                long num = long(n) * ti.f_den, den = long(ti.f_num) * s;
                if (num % den) continue;
                int r = int(num / den);
                for (int k = 0; k < r; ++k) all.push_back({t, r, s, k});
            }
            auto c = classify_triples(t, n, all);
            if (c.classes.empty()) continue;
            auto oc = oracle_check(c);
            CHECK_MESSAGE(oc.ok(), selector(t), " n=", n);
        }
    }
}
