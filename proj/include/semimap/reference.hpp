#pragma once

// Reference catalog of classes as published for the eight types, used for
// table reproduction checks and the discrepancy ledger.

#include <map>
#include <string>
#include <vector>

#include "semimap/types.hpp"

namespace semimap {

struct Triple {
    int r, s, k;
};

struct ReferenceRow {
    TileType type;
    int n;
    std::vector<Triple> members;
    std::vector<int> lengths;   // printed cycle lengths of the first member
    int transversal;            // printed transversal length
};

const std::vector<ReferenceRow>& reference_rows();

// printed class counts per n
const std::map<int, int>& reference_counts(TileType t);

// "3.4.6.4/n=48/row 2" style locator, rows counted from 1 within (type, n)
std::string row_locator(const ReferenceRow& row);

}  // namespace semimap
