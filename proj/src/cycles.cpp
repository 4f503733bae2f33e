#include "semimap/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "semimap/geometry.hpp"

namespace semimap {

namespace {

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long mod(long a, long b) { return ((a % b) + b) % b; }

struct Cover {
    const TorusMap& m;
    const Geometry& g;
    int c;

    Cover(const TorusMap& mm) : m(mm), g(geometry(mm.params.type)),
        c(glue_shift(mm.params.type, mm.params.r, mm.params.s, mm.params.k)) {}

    int row(long Y, long X) const {
        long q = floordiv(Y, m.params.s);
        long y = Y - q * m.params.s;
        return m.row_vertex(int(y), int(mod(X + q * c, m.params.r)));
    }
    int mid(long Y, long I) const {
        if ((long(c) * g.mpp) % g.per)
            throw std::logic_error("gluing shift is not a translation of the mid-band");
        long q = floordiv(Y, m.params.s);
        long y = Y - q * m.params.s;
        long shift = q * c * g.mpp / g.per;
        return m.mid_vertex(int(y), int(mod(I + shift, m.mids_per_row)));
    }
};

// cover position of strand node i (node 0 is the base) for base (B, X0)
struct Walker {
    const Cover& cv;
    const Strand& st;
    long B, X0;

    long len() const { return long(st.path.size()); }
    std::pair<long, long> disp() const { return {st.path.back().dy, st.path.back().d}; }

    // node index may exceed one period
    std::tuple<bool, long, long> node(long idx) const {
        long per = idx / len(), i = idx % len();
        auto [dy, dx] = disp();
        long b = B + per * dy, x0 = X0 + per * dx;
        if (i == 0) return {false, b, x0};
        const Node& nd = st.path[i - 1];
        if (!nd.mid) return {false, b + nd.dy, x0 + nd.d};
        long j0 = (x0 - st.phase) / cv.g.per;
        return {true, b + nd.dy, j0 * cv.g.mpp + nd.d};
    }
    int vertex(long idx) const {
        auto [mid, Y, X] = node(idx);
        return mid ? cv.mid(Y, X) : cv.row(Y, X);
    }
};

void check_step(const TorusMap& m, int u, int v) {
    if (!m.adjacent(u, v))
        throw std::logic_error("strand step " + m.vertex_name(u) + " -> " + m.vertex_name(v) + " is not an edge");
}

}  // namespace

int class_count(TileType t) { return int(geometry(t).classes.size()); }

PathTrace trace_class_cycle(const TorusMap& m, int cls, int start) {
    const auto& g = geometry(m.params.type);
    if (cls < 0 || cls >= int(g.classes.size())) throw std::out_of_range("class index");
    if (m.is_mid(start)) throw ClassUndefinedAtVertex("tracked cycles start on row vertices");
    const Strand& st = g.classes[cls];
    Cover cv(m);
    int P = g.period_rows();
    long y = start / m.params.r, x = start % m.params.r;

    long B = -1, X0 = 0, first = -1;
    if (st.any_row) {
        B = y; X0 = x; first = 0;
    } else {
        for (long i = 0; i <= long(st.path.size()) - 1 && first < 0; ++i) {
            long dy = 0, dx = 0;
            if (i > 0) {
                const Node& nd = st.path[i - 1];
                if (nd.mid) continue;
                dy = nd.dy; dx = nd.d;
            }
            if (mod(y - dy, P) == 0 && mod(x - dx - st.phase, g.per) == 0) {
                B = y - dy; X0 = x - dx; first = i;
            }
        }
        if (first < 0) throw ClassUndefinedAtVertex("no strand of class " + std::to_string(cls) + " through " + m.vertex_name(start));
    }
    Walker w{cv, st, B, X0};
    PathTrace tr;
    tr.steps.push_back(start);
    long limit = long(m.num_vertices() + 1) * w.len();
    for (long idx = first + 1; idx <= first + limit; ++idx) {
        int v = w.vertex(idx);
        check_step(m, tr.steps.back(), v);
        tr.steps.push_back(v);
        if ((idx - first) % w.len() == 0 && v == start) {
            long periods = (idx - first) / w.len();
            auto [dy, dx] = w.disp();
            tr.cover_shift = {periods * dy, periods * dx};
            tr.length = int(tr.steps.size()) - 1;
            return tr;
        }
    }
    throw std::logic_error("class trace did not close");
}

PathTrace trace_class_cycle(const TorusMap& m, int cls) {
    const auto& st = geometry(m.params.type).classes.at(cls);
    return trace_class_cycle(m, cls, m.row_vertex(0, st.phase % m.params.r));
}

HomologyClass homology_class(const PathTrace& trace, const TorusMap& m) {
    int c = glue_shift(m.params.type, m.params.r, m.params.s, m.params.k);
    auto [DY, DX] = trace.cover_shift;
    if (DY % m.params.s) throw std::logic_error("trace is not closed");
    long q = DY / m.params.s;
    long num = DX + q * c;
    if (num % m.params.r) throw std::logic_error("trace is not closed");
    HomologyClass h{num / m.params.r, q};
    if (h.q < 0 || (h.q == 0 && h.p < 0)) h = {-h.p, -h.q};
    return h;
}

std::optional<int> transversal_length_formula(TileType t, int r, int s, int k) {
    if (t == TileType::T33344) return std::min(k + s, int(mod(r - s / 2 - k, r)) + s);
    if (t == TileType::T33434) return std::min(s + k, r + s - k);
    return std::nullopt;
}

std::vector<PathTrace> transversal_climbs(const TorusMap& m) {
    const auto& g = geometry(m.params.type);
    Cover cv(m);
    int r = m.params.r, s = m.params.s;
    std::vector<PathTrace> out;
    for (const auto& cl : g.climbs) {
        Walker w{cv, cl.strand, 0, cl.strand.phase};
        PathTrace tr;
        tr.steps.push_back(w.vertex(0));
        long limit = long(m.num_vertices() + 1) * w.len();
        bool landed = false;
        for (long idx = 1; idx <= limit && !landed; ++idx) {
            auto [mid, Y, X] = w.node(idx);
            int v = w.vertex(idx);
            check_step(m, tr.steps.back(), v);
            tr.steps.push_back(v);
            if (!mid && Y == s) {
                landed = true;
                tr.cover_shift = {Y, X - cl.strand.phase};
            }
        }
        if (!landed) throw std::logic_error("climb never reached the upper cycle");
        tr.length = int(tr.steps.size()) - 1;
        int x0 = cl.strand.phase % r;
        int xl = tr.steps.back() % r;
        tr.landing_column = xl;
        // walk both arcs along row 0 to make sure they are there
        int minus = int(mod(xl - x0, r)), plus = int(mod(x0 - xl, r));
        for (int dir : {-1, 1}) {
            int x = xl, steps = dir < 0 ? minus : plus;
            for (int i = 0; i < steps; ++i) {
                int nx = int(mod(x + (dir < 0 ? -1 : 1), r));
                check_step(m, m.row_vertex(0, x), m.row_vertex(0, nx));
                x = nx;
            }
            if (x != x0) throw std::logic_error("arc did not return to the start column");
        }
        // a climb that lands on its start column closes up by itself: arcs 0 and r
        tr.arc_lengths = {minus, r - minus};
        out.push_back(std::move(tr));
    }
    return out;
}

namespace {

int best_completion(const TorusMap& m) {
    const auto& g = geometry(m.params.type);
    auto climbs = transversal_climbs(m);
    int best = -1;
    for (size_t i = 0; i < climbs.size(); ++i) {
        const auto& tr = climbs[i];
        // the minus arc runs back over the landing offset, the plus arc goes on around
        if (g.climbs[i].minus) {
            int v = tr.length + tr.arc_lengths.first % m.params.r;
            if (best < 0 || v < best) best = v;
        }
        if (g.climbs[i].plus) {
            int v = tr.length + tr.arc_lengths.second % m.params.r;
            if (best < 0 || v < best) best = v;
        }
    }
    return best;
}

struct V2 {
    long x, y;
};

V2 apply(const Mat2& M, V2 v) { return {M.a * v.x + M.b * v.y, M.c * v.x + M.d * v.y}; }

Mat2 inverse(const Mat2& M) {
    int det = M.a * M.d - M.b * M.c;  // +-1
    return {M.d * det, -M.b * det, -M.c * det, M.a * det};
}

// (R, S, K) with L = <(R,0), (-K,S)>, S > 0, 0 <= K < R
std::tuple<long, long, long> hermite(V2 v1, V2 v2) {
    long det = std::labs(v1.x * v2.y - v1.y * v2.x);
    while (v2.y != 0) {
        if (v1.y == 0) { std::swap(v1, v2); continue; }
        long q = v2.y / v1.y;
        v2 = {v2.x - q * v1.x, v2.y - q * v1.y};
        std::swap(v1, v2);
    }
    long R = std::labs(v2.x), S = std::labs(v1.y);
    if (v1.y < 0) v1 = {-v1.x, -v1.y};
    long K = mod(-v1.x, R);
    if (R * S != det) throw std::logic_error("lattice reduction failed");
    return {R, S, K};
}

}  // namespace

std::optional<RepParams> rerepresent(const RepParams& p, int j) {
    const auto& g = geometry(p.type);
    if (j == 0) return p;
    if (!g.has_rot) return std::nullopt;
    int c = glue_shift(p.type, p.r, p.s, p.k);
    if (c % g.per) return std::nullopt;
    int P = g.period_rows();
    V2 a{p.r / g.per, 0}, b{-(c / g.per), p.s / P};
    Mat2 Mi = inverse(g.rot);
    for (int i = 0; i < j; ++i) {
        a = apply(Mi, a);
        b = apply(Mi, b);
    }
    auto [R, S, K] = hermite(a, b);
    RepParams q{p.type, int(R * g.per), int(S * P), 0};
    q.k = int(mod(K * g.per + g.koff + long(g.kshear) * q.s, q.r));
    return q;
}

std::optional<int> transversal_length_traced(const TorusMap& m, int horizontal_class) {
    if (horizontal_class == 0) return best_completion(m);
    auto q = rerepresent(m.params, horizontal_class);
    if (!q) return std::nullopt;
    auto built = build_map(*q);
    if (!built) throw std::logic_error("re-presented map " + triple_str(*q) + " failed to build: " + built.reason);
    return best_completion(*built.map);
}

CycleClassProfile cycle_profile(const TorusMap& m) {
    CycleClassProfile pr{m.params.type, {}, {}};
    int nc = class_count(m.params.type);
    for (int j = 0; j < nc; ++j) pr.class_lengths.push_back(trace_class_cycle(m, j).length);
    if (!geometry(m.params.type).has_rot) {
        pr.transversal_lengths.push_back(*transversal_length_traced(m, 0));
    } else {
        for (int j = 0; j < nc; ++j) pr.transversal_lengths.push_back(*transversal_length_traced(m, j));
    }
    return pr;
}

}  // namespace semimap
