#include "semimap/tiling.hpp"

#include <algorithm>
#include <unordered_map>

#include "semimap/geometry.hpp"

namespace semimap {

namespace {

long edge_key(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return long(u) * n + v;
}

bool consecutive(const std::vector<int>& f, int x, int y) {
    int L = int(f.size());
    for (int i = 0; i < L; ++i) {
        int a = f[i], b = f[(i + 1) % L];
        if ((a == x && b == y) || (a == y && b == x)) return true;
    }
    return false;
}

bool matches_cyclic(const std::vector<int>& sizes, const std::vector<int>& seq) {
    int L = int(seq.size());
    if (int(sizes.size()) != L) return false;
    for (int rot = 0; rot < L; ++rot) {
        bool fw = true, bw = true;
        for (int i = 0; i < L; ++i) {
            if (sizes[(rot + i) % L] != seq[i]) fw = false;
            if (sizes[(rot + L - i) % L] != seq[i]) bw = false;
        }
        if (fw || bw) return true;
    }
    return false;
}

}  // namespace

bool TorusMap::adjacent(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::string TorusMap::vertex_name(int v) const {
    if (v < num_row) return std::to_string(v / params.r) + ":" + std::to_string(v % params.r);
    int w = v - num_row;
    return std::to_string(w / mids_per_row) + ":" + std::to_string(w % mids_per_row) + "'";
}

bool rebuild_incidence(TorusMap& m) {
    int n = m.num_vertices();
    std::unordered_map<long, std::vector<int>> ef;
    for (int fi = 0; fi < int(m.faces.size()); ++fi) {
        const auto& f = m.faces[fi];
        for (size_t i = 0; i < f.size(); ++i) ef[edge_key(f[i], f[(i + 1) % f.size()], n)].push_back(fi);
    }
    m.edges.clear();
    m.adj.assign(n, {});
    bool ok = true;
    for (auto& [key, fl] : ef) {
        if (fl.size() != 2) ok = false;
        int u = int(key / n), v = int(key % n);
        m.edges.push_back({u, v});
        m.adj[u].push_back(v);
        m.adj[v].push_back(u);
    }
    std::sort(m.edges.begin(), m.edges.end());
    for (auto& a : m.adj) std::sort(a.begin(), a.end());

    // rotation: walk faces around each vertex through shared edges
    std::vector<std::vector<std::pair<int, int>>> inc(n);
    for (int fi = 0; fi < int(m.faces.size()); ++fi)
        for (int i = 0; i < int(m.faces[fi].size()); ++i) inc[m.faces[fi][i]].push_back({fi, i});
    auto nbrs = [&](int fi, int pos) {
        const auto& f = m.faces[fi];
        int L = int(f.size());
        return std::pair{f[(pos + L - 1) % L], f[(pos + 1) % L]};
    };
    m.rotation.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (inc[v].empty()) { ok = false; continue; }
        int f0 = inc[v][0].first;
        int fi = f0;
        int exit = nbrs(f0, inc[v][0].second).second;
        m.rotation[v].push_back(f0);
        while (m.rotation[v].size() <= inc[v].size()) {
            const auto& pair = ef[edge_key(v, exit, n)];
            if (pair.size() != 2) break;
            int g = pair[0] == fi ? pair[1] : pair[0];
            if (g == f0) break;
            auto it = std::find_if(inc[v].begin(), inc[v].end(), [&](auto& x) { return x.first == g; });
            auto [a, b] = nbrs(g, it->second);
            exit = a == exit ? b : a;
            m.rotation[v].push_back(g);
            fi = g;
        }
    }
    return ok;
}

BuildResult build_map(const RepParams& p) {
    BuildResult res;
    if (p.r <= 0 || p.s <= 0 || p.k < 0 || p.k >= p.r) {
        res.error = BuildError::Degenerate;
        res.reason = "need r>0, s>0, 0<=k<r";
        return res;
    }
    const auto& g = geometry(p.type);
    int P = g.period_rows();
    if (p.r % g.per || p.s % P) {
        res.error = BuildError::InvalidParams;
        res.reason = "strip period does not divide (r,s)";
        return res;
    }
    TorusMap m;
    m.params = p;
    m.num_row = p.r * p.s;
    m.mids_per_row = p.r / g.per * g.mpp;
    m.num_mid = m.mids_per_row * p.s;
    int c = glue_shift(p.type, p.r, p.s, p.k);
    auto col = [&](long x) { return int(((x % p.r) + p.r) % p.r); };
    for (int row = 0; row < p.s; ++row) {
        for (int j = 0; j < p.r / g.per; ++j) {
            for (const auto& ft : g.bands[row % P]) {
                std::vector<int> f;
                for (auto [kind, d] : ft) {
                    long x = long(j) * g.per + d;
                    if (kind == 'l') f.push_back(m.row_vertex(row, col(x)));
                    else if (kind == 'h') f.push_back(row + 1 < p.s ? m.row_vertex(row + 1, col(x))
                                                                   : m.row_vertex(0, col(x + c)));
                    else {
                        long idx = long(j) * g.mpp + d;
                        int nm = m.mids_per_row;
                        f.push_back(m.mid_vertex(row, int(((idx % nm) + nm) % nm)));
                    }
                }
                auto sorted = f;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                    res.error = BuildError::InvalidParams;
                    res.reason = "face repeats a vertex";
                    return res;
                }
                m.faces.push_back(std::move(f));
            }
        }
    }
    if (!rebuild_incidence(m)) {
        res.error = BuildError::InvalidParams;
        res.reason = "edge not shared by exactly two faces, or isolated vertex";
        return res;
    }
    if (!verify_links(m)) {
        res.error = BuildError::InvalidParams;
        res.reason = "vertex link is not a cycle of the face sequence";
        return res;
    }
    if (!is_polyhedral(m)) {
        res.error = BuildError::InvalidParams;
        res.reason = "two faces meet in more than a vertex or an edge";
        return res;
    }
    res.map = std::move(m);
    return res;
}

bool verify_links(const TorusMap& m) {
    const auto& seq = info(m.params.type).face_sequence;
    int n = m.num_vertices();
    std::vector<std::vector<std::pair<int, int>>> inc(n);
    for (int fi = 0; fi < int(m.faces.size()); ++fi)
        for (int i = 0; i < int(m.faces[fi].size()); ++i) inc[m.faces[fi][i]].push_back({fi, i});

    struct Arc {
        int a, b;
        std::vector<int> inner;  // link vertices contributed by the face, endpoints included
        int size;
    };
    for (int v = 0; v < n; ++v) {
        if (inc[v].size() != seq.size()) return false;
        std::vector<Arc> arcs;
        for (auto [fi, i] : inc[v]) {
            const auto& f = m.faces[fi];
            int L = int(f.size());
            Arc a{f[(i + L - 1) % L], f[(i + 1) % L], {}, L};
            for (int j = 1; j < L; ++j) a.inner.push_back(f[(i + j) % L]);
            arcs.push_back(std::move(a));
        }
        // chain the face arcs into one closed walk
        std::vector<bool> used(arcs.size(), false);
        std::vector<int> order = {0};
        used[0] = true;
        int cur = arcs[0].b;
        for (size_t step = 1; step < arcs.size(); ++step) {
            int nxt = -1;
            for (size_t a = 0; a < arcs.size(); ++a)
                if (!used[a] && (arcs[a].a == cur || arcs[a].b == cur)) { nxt = int(a); break; }
            if (nxt < 0) return false;
            used[nxt] = true;
            cur = arcs[nxt].a == cur ? arcs[nxt].b : arcs[nxt].a;
            order.push_back(nxt);
        }
        if (cur != arcs[0].a) return false;
        // the walk must be simple: endpoints twice, interior vertices once
        std::map<int, int> cnt;
        std::vector<int> ends;
        for (const auto& a : arcs) {
            for (int x : a.inner) ++cnt[x];
            ends.push_back(a.a);
            ends.push_back(a.b);
        }
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        if (ends.size() != arcs.size()) return false;
        for (auto [x, c] : cnt) {
            bool end = std::binary_search(ends.begin(), ends.end(), x);
            if (c != (end ? 2 : 1)) return false;
        }
        std::vector<int> sizes;
        for (int a : order) sizes.push_back(arcs[a].size);
        if (!matches_cyclic(sizes, seq)) return false;
    }
    return true;
}

bool is_polyhedral(const TorusMap& m) {
    int n = m.num_vertices();
    std::vector<std::vector<int>> inc(n);
    for (int fi = 0; fi < int(m.faces.size()); ++fi)
        for (int v : m.faces[fi]) inc[v].push_back(fi);
    std::vector<std::vector<int>> sorted(m.faces.size());
    for (size_t fi = 0; fi < m.faces.size(); ++fi) {
        sorted[fi] = m.faces[fi];
        std::sort(sorted[fi].begin(), sorted[fi].end());
    }
    for (int a = 0; a < int(m.faces.size()); ++a) {
        std::vector<int> others;
        for (int v : m.faces[a])
            for (int b : inc[v])
                if (b > a) others.push_back(b);
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        for (int b : others) {
            std::vector<int> I;
            std::set_intersection(sorted[a].begin(), sorted[a].end(), sorted[b].begin(), sorted[b].end(),
                                  std::back_inserter(I));
            if (I.size() > 2) return false;
            if (I.size() == 2 && !(consecutive(m.faces[a], I[0], I[1]) && consecutive(m.faces[b], I[0], I[1])))
                return false;
        }
    }
    return true;
}

int euler_characteristic(const TorusMap& m) {
    return m.num_vertices() - int(m.edges.size()) + int(m.faces.size());
}

std::map<int, int> face_census(const TorusMap& m) {
    std::map<int, int> c;
    for (const auto& f : m.faces) ++c[int(f.size())];
    return c;
}

std::map<int, int> expected_census(TileType t, int n) {
    std::map<int, int> per_vertex;
    for (int p : info(t).face_sequence) ++per_vertex[p];
    std::map<int, int> c;
    for (auto [p, cnt] : per_vertex) c[p] = n * cnt / p;
    return c;
}

FlagStructure flags(const TorusMap& m) {
    FlagStructure fs;
    int n = m.num_vertices();
    std::unordered_map<long, int> eid;
    for (int i = 0; i < int(m.edges.size()); ++i) eid[edge_key(m.edges[i].first, m.edges[i].second, n)] = i;
    std::vector<int> base(m.faces.size());
    int total = 0;
    for (size_t fi = 0; fi < m.faces.size(); ++fi) {
        base[fi] = total;
        total += 2 * int(m.faces[fi].size());
    }
    auto id = [&](int fi, int i, int sd) {
        int L = int(m.faces[fi].size());
        return base[fi] + 2 * (((i % L) + L) % L) + sd;
    };
    // position of edge (u,v) in each face
    std::unordered_map<long, std::vector<std::pair<int, int>>> epos;
    for (int fi = 0; fi < int(m.faces.size()); ++fi) {
        const auto& f = m.faces[fi];
        int L = int(f.size());
        for (int i = 0; i < L; ++i) epos[edge_key(f[i], f[(i + 1) % L], n)].push_back({fi, i});
    }
    fs.vertex.resize(total);
    fs.edge.resize(total);
    fs.face.resize(total);
    fs.cv.resize(total);
    fs.ce.resize(total);
    fs.cf.resize(total);
    for (int fi = 0; fi < int(m.faces.size()); ++fi) {
        const auto& f = m.faces[fi];
        int L = int(f.size());
        for (int i = 0; i < L; ++i) {
            long ek = edge_key(f[i], f[(i + 1) % L], n);
            for (int sd = 0; sd < 2; ++sd) {
                int x = id(fi, i, sd);
                int v = sd == 0 ? f[i] : f[(i + 1) % L];
                fs.vertex[x] = v;
                fs.edge[x] = eid.at(ek);
                fs.face[x] = fi;
                fs.cv[x] = id(fi, i, 1 - sd);
                fs.ce[x] = sd == 0 ? id(fi, i - 1, 1) : id(fi, i + 1, 0);
                const auto& ps = epos.at(ek);
                auto [g, j] = ps[0].first == fi && ps[0].second == i ? ps[1] : ps[0];
                fs.cf[x] = id(g, j, m.faces[g][j] == v ? 0 : 1);
            }
        }
    }
    return fs;
}

TorusMap relabel(const TorusMap& m, const std::vector<int>& perm) {
    TorusMap out = m;
    for (auto& f : out.faces)
        for (int& v : f) v = perm[v];
    rebuild_incidence(out);
    return out;
}

}  // namespace semimap
