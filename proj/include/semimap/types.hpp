#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semimap {

enum class TileType {
    T33344,   // 3.3.3.4.4
    T33434,   // 3.3.4.3.4
    T3636,    // 3.6.3.6
    T31212,   // 3.12.12
    T33336,   // 3.3.3.3.6
    T4612,    // 4.6.12
    T3464,    // 3.4.6.4
    T488,     // 4.8.8
};

inline constexpr std::array<TileType, 8> kAllTypes = {
    TileType::T33344, TileType::T33434, TileType::T3636, TileType::T31212,
    TileType::T33336, TileType::T4612,  TileType::T3464, TileType::T488};

struct TypeInfo {
    TileType id;
    std::string_view selector;       // "3.3.3.4.4"
    std::vector<int> face_sequence;
    int vertex_degree;
    int f_num, f_den;                // n = f_num/f_den * r * s
    int tracked_class_count;
};

const TypeInfo& info(TileType t);
std::string_view selector(TileType t);
std::optional<TileType> parse_selector(std::string_view s);

// interior angles of the face sequence add up to a full turn
bool angle_sum_is_full_turn(const std::vector<int>& seq);

struct RepParams {
    TileType type;
    int r = 0, s = 0, k = 0;

    bool operator==(const RepParams&) const = default;
};

// vertex count f*r*s, or nullopt when it is not an integer
std::optional<int> vertex_count(const RepParams& p);

// (s, r, k) ordering used for enumeration and representatives
bool srk_less(const RepParams& a, const RepParams& b);

std::string triple_str(const RepParams& p);   // "r,s,k"

}  // namespace semimap
