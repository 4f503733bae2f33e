#include <doctest.h>

#include <set>

#include "semimap/geometry.hpp"
#include "semimap/tiling.hpp"

using namespace semimap;

TEST_CASE("type table") {
    for (auto t : kAllTypes) {
        const auto& ti = info(t);
        CHECK(angle_sum_is_full_turn(ti.face_sequence));
        CHECK(ti.vertex_degree == int(ti.face_sequence.size()));
        CHECK(parse_selector(ti.selector) == t);
    }
    CHECK_FALSE(parse_selector("3.3.3.3.3.3"));
    CHECK_FALSE(angle_sum_is_full_turn({3, 3, 3, 3}));
}

TEST_CASE("T(7,4,3) of 3.3.3.4.4") {
    auto b = build_map({TileType::T33344, 7, 4, 3});
    REQUIRE(b);
    const auto& m = *b.map;
    CHECK(m.num_vertices() == 28);
    CHECK(m.edges.size() == 70);
    CHECK(m.faces.size() == 42);
    CHECK(face_census(m) == std::map<int, int>{{3, 28}, {4, 14}});
    CHECK(euler_characteristic(m) == 0);
    // top row column j is glued to bottom column j+k
    for (int j = 0; j < 7; ++j) CHECK(m.adjacent(m.row_vertex(3, j), m.row_vertex(0, (j + 3) % 7)));
    // squares between rows 0 and 1, triangles between rows 1 and 2
    for (const auto& f : m.faces) {
        std::set<int> rows;
        for (int v : f) rows.insert(v / 7);
        if (rows == std::set<int>{0, 1}) CHECK(f.size() == 4);
        if (rows == std::set<int>{1, 2}) CHECK(f.size() == 3);
    }
}

TEST_CASE("rejections") {
    auto b = build_map({TileType::T33344, 4, 2, 1});
    CHECK_FALSE(b);
    CHECK(b.error == BuildError::InvalidParams);
    for (int k = 0; k < 4; ++k) CHECK_FALSE(build_map({TileType::T33344, 4, 2, k}));
    for (int r = 1; r <= 3; ++r)
        for (int k = 0; k < r; ++k) CHECK_FALSE(build_map({TileType::T33344, r, 2, k}));
    for (int k = 0; k < 2; ++k) CHECK_FALSE(build_map({TileType::T33344, 2, 4, k}));

    CHECK(build_map({TileType::T33344, 0, 2, 0}).error == BuildError::Degenerate);
    CHECK(build_map({TileType::T33344, 5, 0, 0}).error == BuildError::Degenerate);
    CHECK(build_map({TileType::T33344, 5, 2, 5}).error == BuildError::Degenerate);
    CHECK(build_map({TileType::T33344, 5, 2, -1}).error == BuildError::Degenerate);
    // strip does not fit
    CHECK(build_map({TileType::T3464, 10, 2, 4}).error == BuildError::InvalidParams);
}

TEST_CASE("3.6.3.6 T(6,3,0)") {
    auto b = build_map({TileType::T3636, 6, 3, 0});
    REQUIRE(b);
    const auto& m = *b.map;
    CHECK(m.num_vertices() == 27);
    CHECK(m.num_mid == 9);
    CHECK(m.mids_per_row == 3);
    CHECK(face_census(m) == std::map<int, int>{{3, 18}, {6, 9}});
    // mid-band vertex (t,i)' sits over (t,2i) and (t+1,2i)
    for (int t = 0; t < 3; ++t)
        for (int i = 0; i < 3; ++i) {
            int u = m.mid_vertex(t, i);
            CHECK(m.adjacent(u, m.row_vertex(t, 2 * i)));
            if (t + 1 < 3) CHECK(m.adjacent(u, m.row_vertex(t + 1, 2 * i)));
        }
    CHECK(m.vertex_name(m.row_vertex(2, 5)) == "2:5");
    CHECK(m.vertex_name(m.mid_vertex(1, 2)) == "1:2'");
}

TEST_CASE("links") {
    auto a = build_map({TileType::T33344, 5, 2, 2});
    REQUIRE(a);
    CHECK(verify_links(*a.map));
    auto b = build_map({TileType::T488, 8, 3, 2});
    REQUIRE(b);
    CHECK(verify_links(*b.map));

    auto m = *a.map;
    m.faces.pop_back();
    rebuild_incidence(m);
    CHECK_FALSE(verify_links(m));
}

TEST_CASE("face census") {
    auto a = build_map({TileType::T33336, 9, 2, 5});
    REQUIRE(a);
    CHECK(face_census(*a.map) == std::map<int, int>{{3, 24}, {6, 3}});
    CHECK(expected_census(TileType::T33336, 18) == face_census(*a.map));
    for (auto t : kAllTypes) {
        for (int r = 1; r <= 40; ++r)
            for (int s = 1; s <= 4; ++s)
                for (int k = 0; k < r; ++k) {
                    auto b = build_map({t, r, s, k});
                    if (!b) continue;
                    int sum = 0;
                    for (auto [p, c] : face_census(*b.map)) sum += p * c;
                    CHECK(sum == 2 * int(b.map->edges.size()));
                    CHECK(face_census(*b.map) == expected_census(t, b.map->num_vertices()));
                }
    }
}

TEST_CASE("flags") {
    auto check = [](RepParams p, int expected) {
        auto b = build_map(p);
        REQUIRE(b);
        auto fs = flags(*b.map);
        CHECK(fs.size() == expected);
        CHECK(fs.size() == 4 * int(b.map->edges.size()));
        for (int x = 0; x < fs.size(); ++x) {
            for (auto* I : {&fs.cv, &fs.ce, &fs.cf}) {
                CHECK((*I)[x] != x);
                CHECK((*I)[(*I)[x]] == x);
            }
            CHECK(fs.vertex[fs.ce[x]] == fs.vertex[x]);
            CHECK(fs.edge[fs.cv[x]] == fs.edge[x]);
            CHECK(fs.face[fs.cf[x]] != fs.face[x]);
            // alternating cv, ce walks once around the face
            int L = int(b.map->faces[fs.face[x]].size());
            int y = x, steps = 0;
            do {
                y = steps % 2 ? fs.ce[y] : fs.cv[y];
                ++steps;
            } while (y != x);
            CHECK(steps == 2 * L);
        }
    };
    check({TileType::T33344, 5, 2, 2}, 100);
    check({TileType::T3464, 9, 2, 4}, 144);
}

TEST_CASE("rotation lists every incident face once") {
    auto b = build_map({TileType::T4612, 18, 2, 9});
    REQUIRE(b);
    const auto& m = *b.map;
    for (int v = 0; v < m.num_vertices(); ++v) {
        CHECK(m.rotation[v].size() == 3);
        std::set<int> sz;
        for (int f : m.rotation[v]) sz.insert(int(m.faces[f].size()));
        CHECK(sz == std::set<int>{4, 6, 12});
    }
}
