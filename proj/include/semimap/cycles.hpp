#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semimap/tiling.hpp"

namespace semimap {

struct ClassUndefinedAtVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PathTrace {
    std::vector<int> steps;          // vertices; closed traces end where they start
    int length = 0;                  // edge count
    int landing_column = -1;         // transversal climbs only
    std::pair<int, int> arc_lengths{0, 0};  // along the upper cycle, they sum to r
    std::pair<long, long> cover_shift{0, 0};  // (rows, columns) travelled in the cover
};

struct HomologyClass {
    long p = 0, q = 0;   // horizontal wraps, vertical wraps; sign fixed
    bool operator==(const HomologyClass&) const = default;
};

struct CycleClassProfile {
    TileType type;
    std::vector<int> class_lengths;
    std::vector<int> transversal_lengths;
};

int class_count(TileType t);

// closed trace of class `cls` through the row vertex `start`
PathTrace trace_class_cycle(const TorusMap& m, int cls, int start);

// default start: row 0 vertex at the class's column phase
PathTrace trace_class_cycle(const TorusMap& m, int cls);

HomologyClass homology_class(const PathTrace& trace, const TorusMap& m);

// closed forms exist for 3.3.3.4.4 and 3.3.4.3.4 only
std::optional<int> transversal_length_formula(TileType t, int r, int s, int k);

// one climb per allowed lean class from row 0 to row s, with both upper arcs
std::vector<PathTrace> transversal_climbs(const TorusMap& m);

// minimum over the allowed climbs and completions, with class j as horizontal;
// nullopt when the type has no symmetry carrying class j to the horizontal
std::optional<int> transversal_length_traced(const TorusMap& m, int horizontal_class = 0);

// the same map presented with class j as its horizontal cycles
std::optional<RepParams> rerepresent(const RepParams& p, int j);

CycleClassProfile cycle_profile(const TorusMap& m);

}  // namespace semimap
