#pragma once

#include <vector>

#include "semimap/types.hpp"

namespace semimap {

// k values the admissibility rule allows for (r,s), ascending, reduced mod r.
// Empty when (r,s) itself is excluded.
std::vector<int> admissible_k(TileType t, int r, int s);

// every admissible (r,s,k) with f*r*s = n, in (s, r, k) order
std::vector<RepParams> admissible_triples(TileType t, int n);

}  // namespace semimap
