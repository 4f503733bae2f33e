#include "semimap/oracle.hpp"

#include <cstdio>

namespace semimap {

std::string IsoCertificate::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(canonical_code.size() * 2);
    for (auto b : canonical_code) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

IsoCertificate certificate(const TorusMap& m) {
    auto fs = flags(m);
    int N = fs.size();
    const std::vector<int>* inv[3] = {&fs.cv, &fs.ce, &fs.cf};
    std::vector<int> best, code, lab(N), queue(N);
    code.reserve(3 * N);
    for (int st = 0; st < N; ++st) {
        std::fill(lab.begin(), lab.end(), -1);
        code.clear();
        lab[st] = 0;
        queue[0] = st;
        int head = 0, tail = 1, nx = 1;
        bool worse = false;
        while (head < tail && !worse) {
            int x = queue[head++];
            for (auto* I : inv) {
                int y = (*I)[x];
                if (lab[y] < 0) {
                    lab[y] = nx++;
                    queue[tail++] = y;
                }
                code.push_back(lab[y]);
                size_t i = code.size() - 1;
                if (!best.empty()) {
                    if (code[i] > best[i]) { worse = true; break; }
                    if (code[i] < best[i]) {
                        // strictly better prefix: stop comparing from here on
                        best.clear();
                    }
                }
            }
        }
        if (worse) continue;
        if (best.empty() || code < best) best = code;
    }
    IsoCertificate c;
    auto put = [&](int v) {
        c.canonical_code.push_back(std::uint8_t(v >> 8));
        c.canonical_code.push_back(std::uint8_t(v & 255));
    };
    put(N);
    for (int v : best) put(v);
    return c;
}

bool are_isomorphic(const TorusMap& a, const TorusMap& b) { return certificate(a) == certificate(b); }

}  // namespace semimap
