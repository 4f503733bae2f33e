#pragma once

// Fundamental strips and cycle step patterns for the eight tilings.
//
// A strip has `per` columns per horizontal period and one band per row of
// the vertical period. Faces reference vertices on the lower row ('l'),
// the upper row ('h') or the mid-band between them ('m'), as offsets from
// the period start. Row vertex (t,i) for t<s, mid-band (t,i)' for i<r*mpp/per.

#include <vector>

#include "semimap/types.hpp"

namespace semimap {

struct Ref {
    char kind;  // 'l', 'h', 'm'
    int d;
};

using FaceTemplate = std::vector<Ref>;
using Band = std::vector<FaceTemplate>;

struct Mat2 {
    int a, b, c, d;  // rows (a b) (c d)
};

// Step pattern in cover coordinates, relative to a start row vertex at
// column phase `phase`. Mid-band nodes carry (row offset, index offset from
// the start period's first mid). The last node is the next start.
struct Node {
    bool mid;
    int dy, d;
};

struct Strand {
    int phase;
    std::vector<Node> path;
    bool any_row = false;  // horizontal strands run along every row
};

struct Climb {
    Strand strand;
    bool plus, minus;  // which completions along the upper cycle are allowed
};

struct Geometry {
    int per, mpp;
    int koff, kshear;    // column origin of the glued upper boundary
    std::vector<Band> bands;
    bool has_rot;
    Mat2 rot;            // lattice automorphism cycling the tracked classes
    std::vector<Strand> classes;
    std::vector<Climb> climbs;

    int period_rows() const { return int(bands.size()); }
};

const Geometry& geometry(TileType t);

// integer shift applied to upper-boundary columns when gluing
int glue_shift(TileType t, int r, int s, int k);

}  // namespace semimap
