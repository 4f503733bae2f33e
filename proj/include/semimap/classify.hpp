#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semimap/cycles.hpp"
#include "semimap/types.hpp"

namespace semimap {

struct InvariantKey {
    TileType type;
    int n = 0;
    std::optional<int> a1;                    // 3.3.3.4.4 keeps the row length apart
    std::vector<std::pair<int, int>> pairs;   // sorted (class length, transversal length)

    auto operator<=>(const InvariantKey&) const = default;
};

struct EquivalenceClass {
    InvariantKey key;
    std::vector<RepParams> members;   // (s, r, k) order
    const RepParams& representative() const { return members.front(); }
};

struct Classification {
    TileType type;
    int n = 0;
    std::vector<EquivalenceClass> classes;   // sorted by representative
    std::vector<RepParams> rejected;         // admissible by rule but not a polyhedral map
};

struct Catalog {
    TileType type;
    int n_max = 0;
    std::vector<Classification> by_n;        // only n with admissible triples
    std::map<int, int> obj_counts;
};

// throws std::invalid_argument if p does not build
InvariantKey invariant_key(const RepParams& p);
InvariantKey invariant_key(const TorusMap& m);

RepParams canonical_k(const RepParams& p);

// groups triples by key; workers > 1 computes keys concurrently
Classification classify_triples(TileType t, int n, const std::vector<RepParams>& triples, int workers = 1);
Classification classify(TileType t, int n, int workers = 1);
Catalog build_catalog(TileType t, int n_max, int workers = 1);

// SEMIMAP_WORKERS, default 1
int worker_count_from_env();

std::string key_str(const InvariantKey& k);

}  // namespace semimap
