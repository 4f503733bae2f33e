#include "semimap/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "semimap/params.hpp"
#include "semimap/tiling.hpp"

namespace semimap {

InvariantKey invariant_key(const TorusMap& m) {
    InvariantKey key{m.params.type, m.num_vertices(), std::nullopt, {}};
    auto pr = cycle_profile(m);
    if (m.params.type == TileType::T33344) {
        key.a1 = pr.class_lengths[0];
        int t = pr.transversal_lengths[0];
        key.pairs = {{pr.class_lengths[1], t}, {pr.class_lengths[2], t}};
    } else {
        for (size_t j = 0; j < pr.class_lengths.size(); ++j)
            key.pairs.push_back({pr.class_lengths[j], pr.transversal_lengths[j]});
    }
    std::sort(key.pairs.begin(), key.pairs.end());
    return key;
}

InvariantKey invariant_key(const RepParams& p) {
    auto b = build_map(p);
    if (!b) throw std::invalid_argument("T(" + triple_str(p) + ") does not build: " + b.reason);
    return invariant_key(*b.map);
}

RepParams canonical_k(const RepParams& p) {
    if (p.type != TileType::T33344) return p;
    auto m = [](long a, long b) { return int(((a % b) + b) % b); };
    RepParams q = p;
    if (p.s == 2) q.k = std::min(p.k, m(p.r - p.k - 1, p.r));
    else q.k = std::min(p.k, m(p.r - p.s / 2 - p.k, p.r));
    return q;
}

Classification classify_triples(TileType t, int n, const std::vector<RepParams>& triples, int workers) {
    std::vector<std::optional<InvariantKey>> keys(triples.size());
    auto work = [&](size_t i) {
        auto b = build_map(triples[i]);
        if (b) keys[i] = invariant_key(*b.map);
    };
    if (workers <= 1 || triples.size() < 2) {
        for (size_t i = 0; i < triples.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errs(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (size_t i; (i = next++) < triples.size();) work(i);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }
    Classification c{t, n, {}, {}};
    std::map<InvariantKey, std::vector<RepParams>> groups;
    for (size_t i = 0; i < triples.size(); ++i) {
        if (!keys[i]) c.rejected.push_back(triples[i]);
        else groups[*keys[i]].push_back(triples[i]);
    }
    for (auto& [k, mem] : groups) {
        std::sort(mem.begin(), mem.end(), srk_less);
        c.classes.push_back({k, mem});
    }
    std::sort(c.classes.begin(), c.classes.end(),
              [](const auto& a, const auto& b) { return srk_less(a.representative(), b.representative()); });
    return c;
}

Classification classify(TileType t, int n, int workers) {
    return classify_triples(t, n, admissible_triples(t, n), workers);
}

Catalog build_catalog(TileType t, int n_max, int workers) {
    Catalog cat{t, n_max, {}, {}};
    for (int n = 1; n <= n_max; ++n) {
        auto tr = admissible_triples(t, n);
        if (tr.empty()) continue;
        auto c = classify_triples(t, n, tr, workers);
        cat.obj_counts[n] = int(c.classes.size());
        cat.by_n.push_back(std::move(c));
    }
    return cat;
}

int worker_count_from_env() {
    const char* v = std::getenv("SEMIMAP_WORKERS");
    if (!v) return 1;
    int w = std::atoi(v);
    return w >= 1 ? w : 1;
}

std::string key_str(const InvariantKey& k) {
    std::string s = "{";
    if (k.a1) s += "a1=" + std::to_string(*k.a1) + " ";
    for (size_t i = 0; i < k.pairs.size(); ++i) {
        if (i) s += " ";
        s += "(" + std::to_string(k.pairs[i].first) + "," + std::to_string(k.pairs[i].second) + ")";
    }
    return s + "}";
}

}  // namespace semimap
