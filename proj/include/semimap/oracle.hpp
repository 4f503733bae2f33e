#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semimap/tiling.hpp"

namespace semimap {

struct IsoCertificate {
    std::vector<std::uint8_t> canonical_code;
    bool operator==(const IsoCertificate&) const = default;
    auto operator<=>(const IsoCertificate&) const = default;
    std::string hex() const;
};

// minimal breadth-first flag code over all starting flags; mirror images
// are covered because every flag's mirror is also a starting flag
IsoCertificate certificate(const TorusMap& m);

bool are_isomorphic(const TorusMap& a, const TorusMap& b);

}  // namespace semimap
