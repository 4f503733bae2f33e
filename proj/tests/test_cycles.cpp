#include <doctest.h>

#include <algorithm>
#include <set>

#include "semimap/cycles.hpp"
#include "semimap/params.hpp"

using namespace semimap;

namespace {
TorusMap get(TileType t, int r, int s, int k) {
    auto b = build_map({t, r, s, k});
    REQUIRE_MESSAGE(b, b.reason);
    return *b.map;
}
}  // namespace

TEST_CASE("3.3.3.4.4 T(5,2,2) classes") {
    auto m = get(TileType::T33344, 5, 2, 2);
    for (int v = 0; v < m.num_row; ++v) CHECK(trace_class_cycle(m, 0, v).length == 5);
    auto a2 = trace_class_cycle(m, 1), a3 = trace_class_cycle(m, 2);
    CHECK(a2.length == 10);
    CHECK(a3.length == 10);
    CHECK(homology_class(a2, m) != homology_class(a3, m));
    CHECK(homology_class(trace_class_cycle(m, 0, m.row_vertex(0, 0)), m) == HomologyClass{1, 0});
    CHECK(homology_class(trace_class_cycle(m, 0, m.row_vertex(1, 3)), m) == HomologyClass{1, 0});
    for (const auto& tr : {a2, a3}) {
        CHECK(tr.steps.front() == tr.steps.back());
        for (size_t i = 1; i < tr.steps.size(); ++i) CHECK(m.adjacent(tr.steps[i - 1], tr.steps[i]));
    }
}

TEST_CASE("3.6.3.6 T(6,3,0) classes") {
    auto m = get(TileType::T3636, 6, 3, 0);
    for (int j = 0; j < 3; ++j) CHECK(trace_class_cycle(m, j).length == 6);
    CHECK_THROWS_AS(trace_class_cycle(m, 1, m.mid_vertex(0, 0)), ClassUndefinedAtVertex);
}

TEST_CASE("formula") {
    CHECK(transversal_length_formula(TileType::T33344, 5, 2, 2) == 4);
    CHECK(transversal_length_formula(TileType::T33344, 4, 4, 3) == 7);
    CHECK(transversal_length_formula(TileType::T33344, 7, 4, 3) == 6);
    CHECK(transversal_length_formula(TileType::T33434, 8, 2, 4) == 6);
    for (auto t : {TileType::T3636, TileType::T31212, TileType::T33336, TileType::T4612, TileType::T3464, TileType::T488})
        CHECK_FALSE(transversal_length_formula(t, 24, 2, 9));
}

TEST_CASE("traced transversals") {
    CHECK(transversal_length_traced(get(TileType::T33344, 7, 4, 3)) == 6);
    CHECK(transversal_length_traced(get(TileType::T4612, 18, 2, 9)) == 12);
    CHECK(transversal_length_traced(get(TileType::T31212, 28, 1, 9)) == 12);
    CHECK(transversal_length_traced(get(TileType::T3464, 9, 2, 4)) == 6);
    CHECK(transversal_length_traced(get(TileType::T488, 20, 1, 6)) == 7);
    CHECK_FALSE(transversal_length_traced(get(TileType::T33344, 5, 2, 2), 1));
    // two faces of T(24,1,9) of 3.12.12 meet twice
    CHECK_FALSE(build_map({TileType::T31212, 24, 1, 9}));
}

TEST_CASE("climb traces") {
    for (auto t : kAllTypes)
        for (int n = 1; n <= 60; ++n)
            for (const auto& p : admissible_triples(t, n)) {
                auto b = build_map(p);
                if (!b) continue;
                for (const auto& c : transversal_climbs(*b.map)) {
                    CHECK(c.arc_lengths.first + c.arc_lengths.second == p.r);
                    CHECK(c.landing_column >= 0);
                    CHECK(c.steps.back() == b.map->row_vertex(0, c.landing_column));
                    for (size_t i = 1; i < c.steps.size(); ++i) CHECK(b.map->adjacent(c.steps[i - 1], c.steps[i]));
                }
            }
}

TEST_CASE("profiles do not depend on the start vertex") {
    for (auto t : kAllTypes)
        for (int n = 1; n <= 48; ++n)
            for (const auto& p : admissible_triples(t, n)) {
                auto b = build_map(p);
                if (!b) continue;
                const auto& m = *b.map;
                for (int j = 0; j < class_count(t); ++j) {
                    int len = trace_class_cycle(m, j).length;
                    auto h = homology_class(trace_class_cycle(m, j), m);
                    CHECK(h != HomologyClass{0, 0});
                    for (int v = 0; v < m.num_row; ++v) {
                        try {
                            auto tr = trace_class_cycle(m, j, v);
                            CHECK(tr.length == len);
                            CHECK(homology_class(tr, m) == h);
                        } catch (const ClassUndefinedAtVertex&) {
                        }
                    }
                }
            }
}

TEST_CASE("class counts and lengths") {
    for (auto t : kAllTypes)
        for (int n = 1; n <= 60; ++n)
            for (const auto& p : admissible_triples(t, n)) {
                auto b = build_map(p);
                if (!b) continue;
                auto pr = cycle_profile(*b.map);
                CHECK(int(pr.class_lengths.size()) == info(t).tracked_class_count);
                std::set<int> distinct(pr.class_lengths.begin(), pr.class_lengths.end());
                CHECK(distinct.size() <= (t == TileType::T488 ? 2u : 3u));
                CHECK(pr.class_lengths[0] == p.r);
                if (t == TileType::T33344) {
                    CHECK(pr.transversal_lengths.size() == 1);
                } else {
                    CHECK(pr.transversal_lengths.size() == pr.class_lengths.size());
                }
            }
}

TEST_CASE("re-presentation puts class j on the rows") {
    for (auto t : kAllTypes) {
        if (t == TileType::T33344) continue;
        for (int n = 1; n <= 60; ++n)
            for (const auto& p : admissible_triples(t, n)) {
                auto b = build_map(p);
                if (!b) continue;
                for (int j = 0; j < class_count(t); ++j) {
                    auto q = rerepresent(p, j);
                    REQUIRE(q);
                    auto bq = build_map(*q);
                    REQUIRE_MESSAGE(bq, triple_str(*q));
                    CHECK(bq.map->num_vertices() == b.map->num_vertices());
                    CHECK(q->r == trace_class_cycle(*b.map, j).length);
                }
            }
    }
}
