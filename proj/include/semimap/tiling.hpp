#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semimap/types.hpp"

namespace semimap {

struct TorusMap {
    RepParams params;
    int num_row = 0;   // r*s row vertices, id t*r+i
    int num_mid = 0;   // mid-band vertices follow, id num_row + t*mids_per_row + i
    int mids_per_row = 0;
    std::vector<std::vector<int>> faces;
    std::vector<std::pair<int, int>> edges;      // sorted pairs, sorted list
    std::vector<std::vector<int>> adj;           // sorted neighbour lists
    std::vector<std::vector<int>> rotation;      // cyclic order of incident faces

    int num_vertices() const { return num_row + num_mid; }
    int row_vertex(int t, int i) const { return t * params.r + i; }
    int mid_vertex(int t, int i) const { return num_row + t * mids_per_row + i; }
    bool is_mid(int v) const { return v >= num_row; }
    bool adjacent(int u, int v) const;
    std::string vertex_name(int v) const;   // "t:i" or "t:i'"
};

enum class BuildError { None, Degenerate, InvalidParams };

struct BuildResult {
    std::optional<TorusMap> map;
    BuildError error = BuildError::None;
    std::string reason;

    explicit operator bool() const { return map.has_value(); }
};

BuildResult build_map(const RepParams& p);

// Checks every vertex link is one closed cycle with the type's face sequence.
bool verify_links(const TorusMap& m);

// Faces pairwise meet in nothing, a vertex or an edge.
bool is_polyhedral(const TorusMap& m);

int euler_characteristic(const TorusMap& m);

std::map<int, int> face_census(const TorusMap& m);

// counts from the face sequence and Euler's formula
std::map<int, int> expected_census(TileType t, int n);

struct FlagStructure {
    // flag f: (vertex, edge, face)
    std::vector<int> vertex, edge, face;
    std::vector<int> cv, ce, cf;   // change-vertex, change-edge, change-face
    int size() const { return int(vertex.size()); }
};

FlagStructure flags(const TorusMap& m);

// derived map with vertices renamed by perm (perm[old] = new)
TorusMap relabel(const TorusMap& m, const std::vector<int>& perm);

// rebuilds edges, adjacency and rotations from faces; false if not a closed surface
bool rebuild_incidence(TorusMap& m);

}  // namespace semimap
