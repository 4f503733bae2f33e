#include "semimap/params.hpp"

#include <algorithm>

namespace semimap {

namespace {

// {a*t + b : 0 <= t, den*t <= hi_num}, i.e. t <= hi_num/den
std::vector<int> progression(int a, int b, int hi_num, int den, int r) {
    std::vector<int> ks;
    for (int t = 0; den * t <= hi_num; ++t) ks.push_back(((a * t + b) % r + r) % r);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

}  // namespace

std::vector<int> admissible_k(TileType t, int r, int s) {
    if (r <= 0 || s <= 0) return {};
    auto n = vertex_count({t, r, s, 0});
    if (!n) return {};
    switch (t) {
    case TileType::T33344:
        if (s < 2 || s % 2) return {};
        if (s == 2) return r >= 5 ? range(2, r - 3) : std::vector<int>{};
        return r >= 3 ? range(0, r - 1) : std::vector<int>{};
    case TileType::T33434:
        if (s < 2 || s % 2 || r % 2) return {};
        if (s == 2) return r >= 8 ? progression(2, 4, r - 8, 2, r) : std::vector<int>{};
        return r >= 4 ? progression(2, 0, r - 1, 2, r) : std::vector<int>{};  // 2t < r
    case TileType::T3636:
        if (r % 2) return {};
        if (s == 1) return r >= 14 ? progression(2, 6, r - 10, 2, r) : std::vector<int>{};
        if (s == 2) return r >= 8 ? progression(2, 6, r - 8, 2, r) : std::vector<int>{};
        return r >= 6 ? progression(2, 0, r - 1, 2, r) : std::vector<int>{};
    case TileType::T31212:
        if (r % 4 || *n % 6) return {};
        if (s == 1) return r >= 24 ? progression(4, 9, r - 20, 4, r) : std::vector<int>{};
        if (s == 2) return r >= 16 ? progression(4, 5, r - 16, 4, r) : std::vector<int>{};
        return r >= 12 ? progression(4, 1, r - 4, 4, r) : std::vector<int>{};
    case TileType::T33336:
        if (*n % 6 || s % 2 || r % 3) return {};
        if (s == 2) return r >= 9 ? progression(3, 5, r - 9, 3, r) : std::vector<int>{};
        return r >= 6 ? progression(3, 2, r - 3, 3, r) : std::vector<int>{};
    case TileType::T4612:
        if (s % 2 || *n % 12) return {};
        if (s == 2) return r >= 18 ? progression(6, 9, r - 18, 6, r) : std::vector<int>{};
        return r >= 12 ? progression(6, 3, r - 6, 6, r) : std::vector<int>{};
    case TileType::T3464:
        if (r % 3 || s % 2) return {};
        if (s == 2) return r >= 9 ? progression(3, 4, r - 9, 3, r) : std::vector<int>{};
        return r >= 6 ? progression(3, 1, r - 3, 3, r) : std::vector<int>{};
    case TileType::T488:
        if (r % 4) return {};
        if (s == 1) return r >= 20 ? progression(4, 6, r - 12, 4, r) : std::vector<int>{};
        if (s == 2) return r >= 16 ? progression(4, 7, r - 16, 4, r) : std::vector<int>{};
        if (r < 8) return {};
        if (s % 2) return progression(4, 2, r - 4, 4, r);
        return progression(4, -1, r - 4, 4, r);
    }
    return {};
}

std::vector<RepParams> admissible_triples(TileType t, int n) {
    std::vector<RepParams> out;
    if (n < 1) return out;
    const auto& ti = info(t);
    for (int s = 1; s <= n; ++s) {
        long num = long(n) * ti.f_den, den = long(ti.f_num) * s;
        if (num % den) continue;
        int r = int(num / den);
        for (int k : admissible_k(t, r, s)) out.push_back({t, r, s, k});
    }
    return out;
}

}  // namespace semimap
