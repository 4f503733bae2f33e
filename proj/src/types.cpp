#include "semimap/types.hpp"

#include <numeric>
#include <tuple>

namespace semimap {

namespace {

const std::array<TypeInfo, 8>& table() {
    static const std::array<TypeInfo, 8> t = {{
        {TileType::T33344, "3.3.3.4.4", {3, 3, 3, 4, 4}, 5, 1, 1, 3},
        {TileType::T33434, "3.3.4.3.4", {3, 3, 4, 3, 4}, 5, 1, 1, 2},
        {TileType::T3636, "3.6.3.6", {3, 6, 3, 6}, 4, 3, 2, 3},
        {TileType::T31212, "3.12.12", {3, 12, 12}, 3, 3, 2, 3},
        {TileType::T33336, "3.3.3.3.6", {3, 3, 3, 3, 6}, 5, 1, 1, 3},
        {TileType::T4612, "4.6.12", {4, 6, 12}, 3, 1, 1, 3},
        {TileType::T3464, "3.4.6.4", {3, 4, 6, 4}, 4, 1, 1, 3},
        {TileType::T488, "4.8.8", {4, 8, 8}, 3, 1, 1, 2},
    }};
    return t;
}

}  // namespace

const TypeInfo& info(TileType t) { return table()[static_cast<int>(t)]; }

std::string_view selector(TileType t) { return info(t).selector; }

std::optional<TileType> parse_selector(std::string_view s) {
    for (const auto& ti : table())
        if (ti.selector == s) return ti.id;
    return std::nullopt;
}

bool angle_sum_is_full_turn(const std::vector<int>& seq) {
    // sum of (p-2)/p == 2, checked in exact rationals
    long num = 0, den = 1;
    for (int p : seq) {
        num = num * p + (p - 2) * den;
        den *= p;
        long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num == 2 * den;
}

std::optional<int> vertex_count(const RepParams& p) {
    const auto& ti = info(p.type);
    long v = long(ti.f_num) * p.r * p.s;
    if (v % ti.f_den) return std::nullopt;
    return int(v / ti.f_den);
}

bool srk_less(const RepParams& a, const RepParams& b) {
    return std::tie(a.s, a.r, a.k) < std::tie(b.s, b.r, b.k);
}

std::string triple_str(const RepParams& p) {
    return std::to_string(p.r) + "," + std::to_string(p.s) + "," + std::to_string(p.k);
}

}  // namespace semimap
