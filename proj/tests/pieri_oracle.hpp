#pragma once

// Test-only oracle: an independent Pieri recursion for Gr(2, m), written
// against plain integer maps with no dependency on the library's Schubert
// implementation. Used to freeze the golden intersection numbers.

#include <map>
#include <utility>

namespace oracle {

// class = map from partition (a, b), a >= b, to integer coefficient
using Cls = std::map<std::pair<int, int>, long long>;

inline Cls omul_g(const Cls& x, int m) {
    Cls r;
    for (const auto& [p, c] : x) {
        auto [a, b] = p;
        if (a + 1 <= m - 2) r[{a + 1, b}] += c;
        if (b + 1 <= a) r[{a, b + 1}] += c;
    }
    return r;
}

inline Cls omul_c(const Cls& x, int m) {
    Cls r;
    for (const auto& [p, c] : x) {
        auto [a, b] = p;
        if (a + 1 <= m - 2) r[{a + 1, b + 1}] += c;
    }
    return r;
}

inline Cls omonomial(int a, int b, int m) {
    Cls r{{{0, 0}, 1}};
    for (int i = 0; i < a; ++i) r = omul_g(r, m);
    for (int i = 0; i < b; ++i) r = omul_c(r, m);
    return r;
}

// integral over Gr(2, m) of g^a c^b
inline long long odegree(int a, int b, int m) {
    Cls r = omonomial(a, b, m);
    auto it = r.find({m - 2, m - 2});
    return it == r.end() ? 0 : it->second;
}

// integral over Gr(2, n+2) of g^a c^b [F], with [F] = 18 g^2 c + 9 c^2
inline long long odegree_F(int a, int b, int n) {
    return 18 * odegree(a + 2, b + 1, n + 2) + 9 * odegree(a, b + 2, n + 2);
}

} // namespace oracle
