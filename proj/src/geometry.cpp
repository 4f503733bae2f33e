#include "semimap/geometry.hpp"

#include <array>

namespace semimap {

namespace {

Ref l(int d) { return {'l', d}; }
Ref h(int d) { return {'h', d}; }
Ref m(int d) { return {'m', d}; }
Node V(int dy, int d) { return {false, dy, d}; }
Node M(int dy, int d) { return {true, dy, d}; }

Strand row_strand(int per) {
    Strand s{0, {}, true};
    for (int i = 1; i <= per; ++i) s.path.push_back(V(0, i));
    return s;
}

Geometry make(TileType t) {
    Geometry g{};
    switch (t) {
    case TileType::T33344: {
        g.per = 1; g.mpp = 0; g.koff = 0; g.kshear = 0;
        g.bands = {{{l(0), l(1), h(1), h(0)}},
                   {{l(0), l(1), h(1)}, {l(0), h(1), h(0)}}};
        g.has_rot = false;
        Strand up{0, {V(1, 0), V(2, 0)}};
        Strand diag{0, {V(1, 0), V(2, 1)}};
        g.classes = {row_strand(1), up, diag};
        g.climbs = {{up, false, true}, {diag, true, false}};
        break;
    }
    case TileType::T33434: {
        g.per = 2; g.mpp = 0; g.koff = 0; g.kshear = 0;
        g.bands = {{{l(0), l(1), h(1), h(0)}, {l(1), l(2), h(1)}, {h(1), l(2), h(2)}},
                   {{l(0), l(1), h(1)}, {l(0), h(1), h(0)}, {l(1), l(2), h(2), h(1)}}};
        g.has_rot = true; g.rot = {0, -1, 1, 0};
        Strand up{0, {V(1, 0), V(2, 0)}};
        g.classes = {row_strand(2), up};
        g.climbs = {{up, true, true}};
        break;
    }
    case TileType::T3636: {
        g.per = 2; g.mpp = 1; g.koff = 0; g.kshear = 0;
        g.bands = {{{l(0), l(1), m(0)}, {m(0), h(0), h(-1)},
                    {l(1), l(2), m(1), h(1), h(0), m(0)}}};
        g.has_rot = true; g.rot = {0, -1, 1, 1};
        Strand a{0, {M(0, 0), V(1, 0)}};
        Strand b{1, {M(0, 0), V(1, -2)}};
        g.classes = {row_strand(2), a, b};
        g.climbs = {{a, true, true}, {b, true, true}};
        break;
    }
    case TileType::T31212: {
        g.per = 4; g.mpp = 2; g.koff = 1; g.kshear = 0;
        g.bands = {{{l(0), l(1), m(0)}, {h(2), h(3), m(1)},
                    {l(1), l(2), l(3), l(4), m(2), m(3), h(6), h(5), h(4), h(3), m(1), m(0)}}};
        g.has_rot = true; g.rot = {1, -1, 1, 0};
        Strand a{3, {V(0, 1), M(0, 2), M(0, 3), V(1, 4)}};
        Strand b{2, {V(0, -1), M(0, 0), M(0, 1), V(1, 0)}};
        g.classes = {row_strand(4), a, b};
        g.climbs = {{a, true, true}, {b, true, true}};
        break;
    }
    case TileType::T33336: {
        g.per = 3; g.mpp = 0; g.koff = -1; g.kshear = 0;
        g.bands = {{{l(0), l(1), l(2), h(2), h(1), h(0)}, {l(2), l(3), h(2)}, {l(3), h(3), h(2)}},
                   {{l(1), l(2), h(1)}, {l(1), h(1), h(0)}, {l(0), l(1), h(-1)}, {l(0), h(-1), h(-2)},
                    {l(2), l(3), h(1)}, {l(1), h(-1), h(0)}}};
        g.has_rot = true; g.rot = {0, -1, 1, 1};
        Strand a{0, {V(1, 0), V(1, 1), V(2, 0)}};
        Strand b{0, {V(1, -1), V(1, -2), V(2, -3)}};
        g.classes = {row_strand(3), a, b};
        // chiral: only the first lean class is climbed
        g.climbs = {{a, true, true}};
        break;
    }
    case TileType::T4612: {
        g.per = 6; g.mpp = 0; g.koff = 3; g.kshear = 0;
        g.bands = {{{l(0), l(1), h(3), h(2), h(1), h(0)}, {l(2), l(3), l(4), l(5), h(5), h(4)},
                    {l(1), l(2), h(4), h(3)}, {l(5), l(6), h(6), h(5)}},
                   {{l(1), l(2), h(4), h(3)},
                    {l(2), l(3), l(4), l(5), l(6), l(7), h(9), h(8), h(7), h(6), h(5), h(4)}}};
        g.has_rot = true; g.rot = {1, -1, 1, 0};
        Strand a{3, {V(0, -1), V(1, 1), V(1, 2), V(1, 3), V(1, 4), V(2, 6)}};
        Strand b{3, {V(0, -1), V(0, -2), V(0, -3), V(1, -3), V(1, -2), V(2, 0)}};
        g.classes = {row_strand(6), a, b};
        g.climbs = {{a, true, true}, {b, true, true}};
        break;
    }
    case TileType::T3464: {
        g.per = 3; g.mpp = 0; g.koff = 1; g.kshear = 0;
        g.bands = {{{l(0), l(-1), l(-2), h(-2), h(-1), h(0)}, {l(-2), l(-3), h(-3), h(-2)}},
                   {{l(-1), l(-2), h(-1), h(0)}, {l(0), l(-1), h(1), h(2)},
                    {l(-2), l(-3), h(-1)}, {l(-1), h(1), h(0)}}};
        g.has_rot = true; g.rot = {1, -1, 1, 0};
        Strand a{1, {V(1, 0), V(1, 1), V(2, 3)}};
        Strand b{0, {V(1, 0), V(1, -1), V(2, 0)}};
        g.classes = {row_strand(3), a, b};
        g.climbs = {{a, true, true}, {b, true, true}};
        break;
    }
    case TileType::T488: {
        g.per = 4; g.mpp = 0; g.koff = 0; g.kshear = -2;
        g.bands = {{{l(-1), l(0), l(1), l(2), h(0), h(-1), h(-2), h(-3)},
                    {l(2), l(3), h(1), h(0)}}};
        g.has_rot = true; g.rot = {-1, -1, 2, 1};
        Strand z2{2, {V(1, -2), V(1, -3), V(2, -5), V(2, -4)}};
        Strand z3{3, {V(1, -2), V(1, -1), V(2, -3), V(2, -4)}};
        g.classes = {row_strand(4), z2};
        g.climbs = {{z2, true, true}, {z3, true, true}};
        break;
    }
    }
    return g;
}

}  // namespace

const Geometry& geometry(TileType t) {
    static const std::array<Geometry, 8> all = [] {
        std::array<Geometry, 8> a;
        for (auto tt : kAllTypes) a[int(tt)] = make(tt);
        return a;
    }();
    return all[int(t)];
}

int glue_shift(TileType t, int r, int s, int k) {
    const auto& g = geometry(t);
    long c = long(k) - g.koff - long(g.kshear) * s;
    c %= r;
    if (c < 0) c += r;
    return int(c);
}

}  // namespace semimap
