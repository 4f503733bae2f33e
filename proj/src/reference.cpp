#include "semimap/reference.hpp"

namespace semimap {

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {TileType::T33344, 10, {{5,2,2}}, {5, 10, 10}, 4},
        {TileType::T33344, 12, {{6,2,2}, {6,2,3}}, {6, 6, 4}, 4},
        {TileType::T33344, 12, {{3,4,0}, {3,4,1}}, {3, 4, 12}, 4},
        {TileType::T33344, 12, {{3,4,2}}, {3, 12, 12}, 6},
        {TileType::T33344, 14, {{7,2,2}, {7,2,4}}, {7, 14, 14}, 4},
        {TileType::T33344, 14, {{7,2,3}}, {7, 14, 14}, 5},
        {TileType::T33344, 16, {{8,2,2}, {8,2,5}}, {8, 8, 16}, 4},
        {TileType::T33344, 16, {{8,2,3}, {8,2,4}}, {8, 16, 4}, 5},
        {TileType::T33344, 16, {{4,4,0}, {4,4,2}}, {4, 4, 8}, 4},
        {TileType::T33344, 16, {{4,4,1}}, {4, 16, 16}, 5},
        {TileType::T33344, 16, {{4,4,3}}, {4, 16, 16}, 7},
        {TileType::T33344, 18, {{9,2,2}, {9,2,6}}, {9, 18, 6}, 4},
        {TileType::T33344, 18, {{9,2,3}, {9,2,5}}, {9, 6, 18}, 5},
        {TileType::T33344, 18, {{9,2,4}}, {9, 18, 18}, 6},
        {TileType::T33344, 18, {{3,6,0}}, {3, 6, 6}, 6},
        {TileType::T33344, 18, {{3,6,1}, {3,6,2}}, {3, 18, 18}, 7},
        {TileType::T33344, 20, {{10,2,2}, {10,2,7}}, {10, 10, 20}, 4},
        {TileType::T33344, 20, {{10,2,3}, {10,2,6}}, {10, 20, 10}, 5},
        {TileType::T33344, 20, {{10,2,4}, {10,2,5}}, {10, 10, 4}, 6},
        {TileType::T33344, 20, {{5,4,0}, {5,4,3}}, {5, 4, 20}, 4},
        {TileType::T33344, 20, {{5,4,1}, {5,4,2}}, {5, 20, 20}, 5},
        {TileType::T33344, 20, {{5,4,4}}, {5, 20, 20}, 8},
        {TileType::T33344, 22, {{11,2,2}, {11,2,8}}, {11, 22, 22}, 4},
        {TileType::T33344, 22, {{11,2,3}, {11,2,7}}, {11, 22, 22}, 5},
        {TileType::T33344, 22, {{11,2,4}, {11,2,6}}, {11, 22, 22}, 6},
        {TileType::T33344, 22, {{11,2,5}}, {11, 22, 22}, 7},
        {TileType::T33434, 16, {{8,2,4}, {4,4,2}}, {8, 4}, 6},
        {TileType::T33434, 16, {{4,4,0}}, {4, 4}, 4},
        {TileType::T33434, 20, {{10,2,4}, {10,2,6}}, {10, 10}, 6},
        {TileType::T33434, 24, {{12,2,4}, {12,2,8}, {6,4,2}, {6,4,4}}, {12, 6}, 6},
        {TileType::T33434, 24, {{12,2,6}, {4,6,2}}, {4, 12}, 8},
        {TileType::T33434, 24, {{6,4,0}, {4,6,0}}, {4, 6}, 6},
        {TileType::T33434, 28, {{14,2,4}, {14,2,10}, {14,2,6}, {14,2,8}}, {14, 14}, 6},
        {TileType::T33434, 32, {{16,2,4}, {16,2,12}, {8,4,2}, {8,4,6}}, {16, 8}, 6},
        {TileType::T33434, 32, {{16,2,6}, {16,2,10}}, {16, 16}, 8},
        {TileType::T33434, 32, {{16,2,8}, {4,8,2}}, {4, 16}, 10},
        {TileType::T33434, 32, {{8,4,4}}, {8, 8}, 8},
        {TileType::T33434, 32, {{8,4,0}, {4,8,0}}, {4, 8}, 8},
        {TileType::T3636, 21, {{14,1,6}, {14,1,8}, {14,1,10}}, {14, 14, 14}, 8},
        {TileType::T3636, 24, {{16,1,6}, {16,1,12}, {8,2,6}}, {16, 16, 8}, 8},
        {TileType::T3636, 24, {{16,1,8}, {16,1,10}}, {16, 16, 4}, 8},
        {TileType::T3636, 27, {{18,1,6}, {18,1,8}, {18,1,12}, {18,1,14}, {6,3,2}, {6,3,4}}, {18, 18, 6}, 8},
        {TileType::T3636, 27, {{18,1,10}}, {18, 18, 18}, 10},
        {TileType::T3636, 27, {{6,3,0}}, {6, 6, 6}, 6},
        {TileType::T3636, 30, {{20,1,6}, {20,1,8}, {20,1,14}, {20,1,16}, {10,2,2}, {10,2,6}, {10,2,8}}, {20, 20, 10}, 8},
        {TileType::T3636, 30, {{20,1,10}, {20,1,12}, {10,2,0}, {10,2,4}}, {20, 4, 10}, 10},
        {TileType::T31212, 36, {{24,1,9}, {24,1,13}}, {24, 12, 8}, 12},
        {TileType::T31212, 42, {{28,1,9}, {28,1,13}, {28,1,17}}, {28, 28, 28}, 12},
        {TileType::T31212, 48, {{32,1,9}, {32,1,21}, {16,2,5}}, {32, 32, 16}, 12},
        {TileType::T31212, 48, {{32,1,13}, {32,1,17}}, {32, 32, 8}, 16},
        {TileType::T33336, 18, {{9,2,5}}, {9, 9, 9}, 6},
        {TileType::T33336, 24, {{12,2,5}, {12,2,8}, {6,4,2}}, {12, 6, 12}, 7},
        {TileType::T33336, 24, {{6,4,5}}, {6, 6, 6}, 6},
        {TileType::T33336, 30, {{15,2,5}, {15,2,8}, {15,2,11}}, {15, 15, 15}, 7},
        {TileType::T33336, 36, {{18,2,5}, {18,2,14}, {9,4,2}}, {18, 9, 18}, 7},
        {TileType::T33336, 36, {{18,2,8}, {18,2,11}, {9,4,5}, {9,4,8}, {6,6,2}, {6,6,5}}, {18, 6, 9}, 10},
        {TileType::T33336, 42, {{21,2,5}, {21,2,8}, {21,2,11}, {21,2,14}, {21,2,17}}, {21, 21, 21}, 7},
        {TileType::T4612, 36, {{18,2,9}}, {18, 18, 18}, 12},
        {TileType::T4612, 48, {{24,2,9}, {12,4,9}, {24,2,15}}, {24, 12, 24}, 12},
        {TileType::T4612, 48, {{12,4,3}}, {12, 12, 12}, 12},
        {TileType::T4612, 60, {{30,2,9}, {30,2,15}, {30,2,21}}, {30, 30, 30}, 12},
        {TileType::T3464, 18, {{9,2,4}}, {9, 9, 9}, 6},
        {TileType::T3464, 24, {{12,2,4}, {12,2,7}, {6,4,4}}, {12, 6, 12}, 6},
        {TileType::T3464, 24, {{6,4,1}}, {6, 6, 6}, 6},
        {TileType::T3464, 30, {{15,2,4}, {15,2,7}, {15,2,10}}, {15, 15, 15}, 6},
        {TileType::T3464, 36, {{18,2,4}, {18,2,13}, {9,4,7}}, {18, 9, 18}, 6},
        {TileType::T3464, 36, {{18,2,7}, {18,2,10}, {9,4,1}, {9,4,4}, {6,6,4}, {6,6,1}}, {18, 9, 6}, 9},
        {TileType::T3464, 42, {{21,2,4}, {21,2,7}, {21,2,10}, {21,2,13}, {21,2,16}}, {21, 21, 21}, 6},
        {TileType::T3464, 48, {{24,2,4}, {24,2,7}, {24,2,16}, {24,2,19}, {12,4,4}, {12,4,10}}, {24, 24, 12}, 6},
        {TileType::T3464, 48, {{24,2,10}, {24,2,13}, {6,8,4}}, {24, 24, 6}, 12},
        {TileType::T3464, 48, {{12,4,1}, {12,4,7}, {6,8,1}}, {12, 12, 6}, 6},
        {TileType::T3464, 54, {{27,2,4}, {27,2,13}, {27,2,22}}, {27, 27, 27}, 6},
        {TileType::T3464, 54, {{27,2,7}, {27,2,10}, {27,2,16}, {27,2,19}, {9,6,4}, {9,6,7}}, {27, 27, 9}, 9},
        {TileType::T3464, 54, {{9,6,1}}, {9, 9, 9}, 9},
        {TileType::T488, 20, {{20,1,6}, {20,1,14}}, {20, 20}, 7},
        {TileType::T488, 24, {{24,1,6}, {24,1,18}, {8,3,2}, {8,3,6}}, {24, 8}, 7},
        {TileType::T488, 24, {{24,1,14}, {24,1,10}}, {24, 24}, 11},
    };
    return rows;
}

const std::map<int, int>& reference_counts(TileType t) {
    static const std::map<TileType, std::map<int, int>> counts = {
        {TileType::T33344, {{10, 1}, {12, 3}, {14, 2}, {16, 5}, {18, 5}, {20, 6}, {22, 4}}},
        {TileType::T33434, {{16, 2}, {20, 1}, {24, 3}, {28, 1}, {32, 5}}},
        {TileType::T3636, {{21, 1}, {24, 2}, {27, 3}, {30, 2}}},
        {TileType::T31212, {{36, 1}, {42, 1}, {48, 2}}},
        {TileType::T33336, {{18, 1}, {24, 2}, {30, 1}, {36, 2}, {42, 1}}},
        {TileType::T4612, {{36, 1}, {48, 2}, {60, 1}}},
        {TileType::T3464, {{18, 1}, {24, 2}, {30, 1}, {36, 2}, {42, 1}, {48, 3}, {54, 3}}},
        {TileType::T488, {{20, 1}, {24, 2}}},
    };
    return counts.at(t);
}

std::string row_locator(const ReferenceRow& row) {
    int idx = 0;
    for (const auto& x : reference_rows()) {
        if (x.type == row.type && x.n == row.n) ++idx;
        if (&x == &row) break;
    }
    return std::string(selector(row.type)) + "/n=" + std::to_string(row.n) + "/row " + std::to_string(idx);
}

}  // namespace semimap
