#include <doctest.h>

#include <array>

#include "semimap/params.hpp"

using namespace semimap;

namespace {
std::vector<std::array<int, 3>> rsk(const std::vector<RepParams>& v) {
    std::vector<std::array<int, 3>> out;
    for (const auto& p : v) out.push_back({p.r, p.s, p.k});
    return out;
}
}  // namespace

TEST_CASE("admissible triples") {
    using V = std::vector<std::array<int, 3>>;
    CHECK(rsk(admissible_triples(TileType::T33344, 10)) == V{{5, 2, 2}});
    CHECK(rsk(admissible_triples(TileType::T33344, 12)) == V{{6, 2, 2}, {6, 2, 3}, {3, 4, 0}, {3, 4, 1}, {3, 4, 2}});
    CHECK(admissible_triples(TileType::T488, 12).empty());
    CHECK(admissible_triples(TileType::T4612, 13).empty());
    CHECK(admissible_triples(TileType::T33344, 0).empty());
    // 4t+9 for t <= (24-20)/4
    CHECK(rsk(admissible_triples(TileType::T31212, 36)) == V{{24, 1, 9}, {24, 1, 13}});
}

TEST_CASE("k-set shapes") {
    using V = std::vector<int>;
    CHECK(admissible_k(TileType::T33434, 8, 2) == V{4});
    CHECK(admissible_k(TileType::T33434, 4, 4) == V{0, 2});
    CHECK(admissible_k(TileType::T3636, 14, 1) == V{6, 8, 10});
    CHECK(admissible_k(TileType::T3636, 6, 3) == V{0, 2, 4});
    CHECK(admissible_k(TileType::T33336, 9, 2) == V{5});
    CHECK(admissible_k(TileType::T33336, 6, 4) == V{2, 5});
    CHECK(admissible_k(TileType::T4612, 18, 2) == V{9});
    CHECK(admissible_k(TileType::T3464, 9, 2) == V{4});
    CHECK(admissible_k(TileType::T488, 8, 3) == V{2, 6});
    // even s reduces 4t-1 mod r
    CHECK(admissible_k(TileType::T488, 8, 4) == V{3, 7});
    CHECK(admissible_k(TileType::T488, 16, 2) == V{7});
    CHECK(admissible_k(TileType::T488, 20, 1) == V{6, 10, 14});
    // divisibility predicates taken together
    CHECK(admissible_k(TileType::T33336, 9, 4).size() == 3);
    CHECK(admissible_k(TileType::T33336, 8, 4).empty());
}

TEST_CASE("enumeration order") {
    for (auto t : kAllTypes)
        for (int n = 1; n <= 96; ++n) {
            auto v = admissible_triples(t, n);
            for (size_t i = 1; i < v.size(); ++i) CHECK(srk_less(v[i - 1], v[i]));
            for (const auto& p : v) {
                CHECK(vertex_count(p) == n);
                CHECK(p.k >= 0);
                CHECK(p.k < p.r);
            }
        }
}
