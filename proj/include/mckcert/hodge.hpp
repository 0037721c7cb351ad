#pragma once

// Hodge-theoretic bookkeeping: Hodge diamonds of smooth hypersurfaces,
// Poincare-polynomial calculus for the Galkin-Shinder-Voisin identity
// relating a cubic X, its Hilbert square and its Fano variety of lines F,
// and Hodge-class censuses on F and F x F computed through the invariant
// theory of the middle monodromy group (orthogonal for even n, symplectic
// for odd n).

#include "mckcert/fano_ring.hpp"
#include "mckcert/matrix.hpp"
#include "mckcert/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace mck::hodge {

using exact::Int;
using exact::Mat;
using exact::Rat;

// ---------------------------------------------------------------------------
// Hodge diamonds of smooth hypersurfaces
// ---------------------------------------------------------------------------

class HodgeDiamond {
public:
    explicit HodgeDiamond(int dim)
        : dim_(dim), table_(dim + 1, std::vector<Int>(dim + 1, 0)) {}

    int dim() const { return dim_; }
    Int h(int p, int q) const {
        if (p < 0 || q < 0 || p > dim_ || q > dim_) return 0;
        return table_[p][q];
    }
    void set(int p, int q, Int v) { table_[p][q] = std::move(v); }
    void add(int p, int q, const Int& v) { table_[p][q] += v; }

    Int betti(int k) const {
        Int b = 0;
        for (int p = 0; p <= dim_; ++p) {
            int q = k - p;
            if (q >= 0 && q <= dim_) b += table_[p][q];
        }
        return b;
    }

    Int euler() const {
        Int chi = 0;
        for (int k = 0; k <= 2 * dim_; ++k) chi += (k % 2 == 0 ? betti(k) : -betti(k));
        return chi;
    }

    bool symmetric() const {
        for (int p = 0; p <= dim_; ++p)
            for (int q = 0; q <= dim_; ++q)
                if (table_[p][q] != table_[q][p] ||
                    table_[p][q] != table_[dim_ - p][dim_ - q])
                    return false;
        return true;
    }

private:
    int dim_;
    std::vector<std::vector<Int>> table_;
};

// Primitive middle Hodge numbers h^{n-q,q}_prim (q = 0..n) of a smooth
// degree-d hypersurface in P^{n+1}: the number of integer points
// (a_0..a_{n+1}) with 1 <= a_i <= d-1 and sum = (q+1)d, computed as a
// coefficient of the generating polynomial ((x + ... + x^{d-1})^{n+2}.
inline std::vector<Int> hypersurface_hodge(int d, int n) {
    if (d < 2 || n < 1) throw std::invalid_argument("hypersurface_hodge: need d >= 2, n >= 1");
    const int vars = n + 2;
    std::vector<Int> poly{1}; // coefficients, poly[s] = #ways to reach sum s
    for (int v = 0; v < vars; ++v) {
        std::vector<Int> next(poly.size() + d - 1, 0);
        for (std::size_t s = 0; s < poly.size(); ++s) {
            if (poly[s] == 0) continue;
            for (int a = 1; a <= d - 1; ++a) next[s + a] += poly[s];
        }
        poly = std::move(next);
    }
    std::vector<Int> prim(n + 1, 0);
    for (int q = 0; q <= n; ++q) {
        std::size_t target = static_cast<std::size_t>(q + 1) * d;
        if (target < poly.size()) prim[q] = poly[target];
    }
    return prim;
}

// Full diamond: Tate classes h^i on the diagonal plus the primitive middle.
inline HodgeDiamond hypersurface_diamond(int d, int n) {
    HodgeDiamond dia(n);
    for (int p = 0; p <= n; ++p) dia.set(p, p, 1);
    auto prim = hypersurface_hodge(d, n);
    for (int q = 0; q <= n; ++q) dia.add(n - q, q, prim[q]);
    return dia;
}

// b = dim H_X, the primitive middle Betti number of the cubic n-fold.
inline int cubic_middle_betti(int n) {
    auto prim = hypersurface_hodge(3, n);
    Int b = 0;
    for (const Int& x : prim) b += x;
    return static_cast<int>(b);
}

inline Int cubic_euler(int n) { return hypersurface_diamond(3, n).euler(); }

// ---------------------------------------------------------------------------
// Poincare polynomials and the Galkin-Shinder-Voisin identity
// ---------------------------------------------------------------------------

// A Poincare polynomial: dims[k] = Betti number in degree k.
using GradedDims = std::vector<Int>;

inline GradedDims trim(GradedDims v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline GradedDims add(const GradedDims& a, const GradedDims& b) {
    GradedDims r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline GradedDims shift(const GradedDims& a, int k) {
    GradedDims r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

inline Int total(const GradedDims& a) {
    Int t = 0;
    for (const Int& x : a) t += x;
    return t;
}

inline Int euler(const GradedDims& a) {
    Int t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += (i % 2 == 0 ? a[i] : -a[i]);
    return t;
}

// Graded super-symmetric square: even-degree pieces contribute Sym^2,
// odd-degree pieces contribute Lambda^2, cross terms contribute products.
// This is the single place where the sign convention of the symmetric
// algebra "with the commutativity constraint imposed by the parity" lives.
inline GradedDims super_sym2(const GradedDims& v) {
    GradedDims r(2 * v.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k)
        for (std::size_t l = k + 1; l < v.size(); ++l) r[k + l] += v[k] * v[l];
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Int& d = v[k];
        r[2 * k] += (k % 2 == 0) ? Int(d * (d + 1) / 2) : Int(d * (d - 1) / 2);
    }
    return trim(r);
}

// Betti numbers of the cubic n-fold X.
inline GradedDims cubic_poincare(int n) {
    GradedDims v(2 * n + 1, 0);
    for (int i = 0; i <= n; ++i) v[2 * i] += 1;
    v[n] += cubic_middle_betti(n);
    return v;
}

// Betti numbers of F from the decomposition of H*(F) into Sym^2 H_X, shifted
// copies of H_X, and Tate classes with multiplicities a_i = r_i except
// a_{n-2} = r_{n-2} - 1.
inline GradedDims gs_fano_poincare(int n) {
    if (n < 3) throw std::invalid_argument("gs_fano_poincare: need n >= 3");
    const int b = cubic_middle_betti(n);
    GradedDims v(4 * n - 7, 0);
    for (int i = 0; i <= 2 * n - 4; ++i) {
        int a_i = fano::r_formula(i, n) - (i == n - 2 ? 1 : 0);
        v[2 * i] += a_i;
    }
    for (int i = 0; i <= n - 2; ++i) v[n - 2 + 2 * i] += b;
    // super-Sym^2 of the weight-(n-2) structure H_X
    v[2 * n - 4] += (n % 2 == 0) ? Int(b) * (b + 1) / 2 : Int(b) * (b - 1) / 2;
    return v;
}

struct GsvReport {
    int n = 0;
    bool sides_equal = false;
    GradedDims lhs, rhs, difference;
    GradedDims solved_fano;     // P(F) solved out of the identity
    bool solved_matches = false;
    bool ok = false;
};

// Both sides of the motive identity, as Poincare polynomials:
//   sum_{i=0}^{n} P(X) t^{2i} + P(F)(t^6 + 2 t^4 + t^2)
//     = P(X^{(2)}) + sum_{i=1}^{n-1} P(X) t^{2i} + P(F)(t^6 + t^4 + t^2),
// with P(X^{(2)}) the graded super-symmetric square of P(X). Solving the
// identity for P(F) must reproduce gs_fano_poincare.
inline GsvReport verify_gsv_identity(int n) {
    GsvReport rep;
    rep.n = n;
    GradedDims px = cubic_poincare(n);
    GradedDims pf = gs_fano_poincare(n);

    GradedDims lhs;
    for (int i = 0; i <= n; ++i) lhs = add(lhs, shift(px, 2 * i));
    lhs = add(lhs, shift(pf, 6));
    lhs = add(lhs, shift(pf, 4));
    lhs = add(lhs, shift(pf, 4));
    lhs = add(lhs, shift(pf, 2));

    GradedDims rhs = super_sym2(px);
    for (int i = 1; i <= n - 1; ++i) rhs = add(rhs, shift(px, 2 * i));
    rhs = add(rhs, shift(pf, 6));
    rhs = add(rhs, shift(pf, 4));
    rhs = add(rhs, shift(pf, 2));

    rep.lhs = trim(lhs);
    rep.rhs = trim(rhs);
    rep.sides_equal = rep.lhs == rep.rhs;
    if (!rep.sides_equal) {
        GradedDims d(std::max(lhs.size(), rhs.size()), 0);
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = (i < lhs.size() ? lhs[i] : Int(0)) - (i < rhs.size() ? rhs[i] : Int(0));
        rep.difference = trim(d);
    }

    // Treat P(F) as unknown: P(F) t^4 = P(X^{(2)}) - P(X)(1 + t^{2n}).
    GradedDims num = super_sym2(px);
    GradedDims sub = add(px, shift(px, 2 * n));
    GradedDims diff(std::max(num.size(), sub.size()), 0);
    bool solvable = true;
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = (i < num.size() ? num[i] : Int(0)) - (i < sub.size() ? sub[i] : Int(0));
    for (std::size_t i = 0; i < diff.size() && i < 4; ++i) solvable = solvable && diff[i] == 0;
    if (solvable) {
        GradedDims solved(diff.size() >= 4 ? diff.size() - 4 : 0, 0);
        for (std::size_t i = 4; i < diff.size(); ++i) solved[i - 4] = diff[i];
        rep.solved_fano = trim(solved);
        rep.solved_matches = rep.solved_fano == trim(pf);
    }
    rep.ok = rep.sides_equal && rep.solved_matches;
    return rep;
}

// ---------------------------------------------------------------------------
// Hodge class counts via invariant theory
// ---------------------------------------------------------------------------

enum class Parity { even, odd };

inline Parity cubic_parity(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

// Invariant count of the orthogonal (even) / symplectic (odd) group on a
// tensor product of blocks, each block a single copy of H or a super-Sym^2
// of H. Computed concretely: perfect matchings of the tensor slots built
// from the invariant form q are instantiated in a B-dimensional model space,
// projected by the block (anti)symmetrizations, and their exact rank is the
// invariant count. Valid in the stable range (block count <= 4, dim >= B).
inline int hdg_invariant_count(const std::vector<int>& blocks, Parity parity, int B = 10) {
    int k = 0;
    for (int s : blocks) {
        if (s != 1 && s != 2) throw std::invalid_argument("hdg_invariant_count: unsupported atom");
        k += s;
    }
    if (k == 0) return 1;
    if (k > 4) throw std::invalid_argument("hdg_invariant_count: tensor degree > 4 unsupported");
    if (k % 2 == 1) return 0;

    auto q = [&](int i, int j) -> Rat {
        if (parity == Parity::even) return i == j ? 1 : 0;
        if (i / 2 != j / 2) return 0;           // symplectic pairs (2t, 2t+1)
        if (i == j) return 0;
        return (i % 2 == 0) ? 1 : -1;
    };

    // perfect matchings of k slots (k = 2 or 4)
    std::vector<std::vector<std::pair<int, int>>> matchings;
    if (k == 2) {
        matchings = {{{0, 1}}};
    } else {
        matchings = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    }

    const std::size_t dim = [&] {
        std::size_t d = 1;
        for (int i = 0; i < k; ++i) d *= B;
        return d;
    }();

    std::vector<int> idx(k);
    auto flat = [&](const std::vector<int>& v) {
        std::size_t f = 0;
        for (int i = 0; i < k; ++i) f = f * B + v[i];
        return f;
    };

    Mat rows(matchings.size(), dim);
    for (std::size_t mi = 0; mi < matchings.size(); ++mi) {
        std::vector<Rat> vec(dim, Rat(0));
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            Rat val = 1;
            for (auto [s, t] : matchings[mi]) {
                val *= q(idx[s], idx[t]);
                if (val == 0) break;
            }
            if (val != 0) vec[flat(idx)] = val;
            int pos = k - 1;
            while (pos >= 0 && ++idx[pos] == B) idx[pos--] = 0;
            if (pos < 0) break;
        }
        // block projections: symmetrize (even) / antisymmetrize (odd) within
        // each Sym^2 block
        int slot = 0;
        for (int s : blocks) {
            if (s == 2) {
                std::vector<Rat> proj(dim, Rat(0));
                std::fill(idx.begin(), idx.end(), 0);
                while (true) {
                    std::size_t f = flat(idx);
                    if (vec[f] != 0) {
                        std::vector<int> sw = idx;
                        std::swap(sw[slot], sw[slot + 1]);
                        Rat half = vec[f] / 2;
                        proj[f] += half;
                        proj[flat(sw)] += (parity == Parity::even) ? half : -half;
                    }
                    int pos = k - 1;
                    while (pos >= 0 && ++idx[pos] == B) idx[pos--] = 0;
                    if (pos < 0) break;
                }
                vec = std::move(proj);
            }
            slot += s;
        }
        for (std::size_t j = 0; j < dim; ++j) rows.at(mi, j) = vec[j];
    }
    return static_cast<int>(exact::rref(rows).rank);
}

struct HdgAtomTable {
    Parity parity;
    int h = -1;          // hdg(H)
    int sym2 = -1;       // hdg(Sym^2 H)
    int h_h = -1;        // hdg(H (x) H)
    int h_sym2 = -1;     // hdg(H (x) Sym^2 H)
    int sym2_sym2 = -1;  // hdg(Sym^2 H (x) Sym^2 H)

    bool matches_expected() const {
        return h == 0 && h_sym2 == 0 && h_h == 1 && sym2 == 1 && sym2_sym2 == 2;
    }
};

inline HdgAtomTable hdg_atom_table(Parity parity) {
    HdgAtomTable t;
    t.parity = parity;
    t.h = hdg_invariant_count({1}, parity);
    t.sym2 = hdg_invariant_count({2}, parity);
    t.h_h = hdg_invariant_count({1, 1}, parity);
    t.h_sym2 = hdg_invariant_count({1, 2}, parity);
    t.sym2_sym2 = hdg_invariant_count({2, 2}, parity);
    if (!t.matches_expected())
        throw std::logic_error("hdg_atom_table: invariant counts disagree with expected values");
    return t;
}

inline const HdgAtomTable& hdg_atom_table_cached(Parity parity) {
    static const HdgAtomTable even_table = hdg_atom_table(Parity::even);
    static const HdgAtomTable odd_table = hdg_atom_table(Parity::odd);
    return parity == Parity::even ? even_table : odd_table;
}

// Atom content of H^u(F): Tate classes, copies of H_X, and one Sym^2 H_X.
enum class Atom { tate, h, sym2 };

inline std::vector<std::pair<Atom, Int>> fano_degree_atoms(int u, int n) {
    std::vector<std::pair<Atom, Int>> out;
    if (u < 0 || u > 4 * n - 8) return out;
    if (u % 2 == 0) {
        int i = u / 2;
        if (i <= 2 * n - 4) {
            Int a = fano::r_formula(i, n) - (i == n - 2 ? 1 : 0);
            if (a > 0) out.push_back({Atom::tate, a});
        }
    }
    if ((u - (n - 2)) % 2 == 0) {
        int i = (u - (n - 2)) / 2;
        if (i >= 0 && i <= n - 2) out.push_back({Atom::h, 1});
    }
    if (u == 2 * n - 4) out.push_back({Atom::sym2, 1});
    return out;
}

inline int hdg_of_pair(Atom a, Atom b, const HdgAtomTable& t) {
    if (a > b) std::swap(a, b);
    if (a == Atom::tate && b == Atom::tate) return 1;
    if (a == Atom::tate && b == Atom::h) return t.h;
    if (a == Atom::tate && b == Atom::sym2) return t.sym2;
    if (a == Atom::h && b == Atom::h) return t.h_h;
    if (a == Atom::h && b == Atom::sym2) return t.h_sym2;
    return t.sym2_sym2;
}

// hdg(H^{2k}(F)) for very general X; must equal r_k.
inline Int hdg_count_F(int k, int n) {
    if (k < 0 || k > 2 * n - 4) throw std::out_of_range("hdg_count_F: k outside 0..2n-4");
    if (cubic_middle_betti(n) < 10)
        throw std::logic_error("hdg_count_F: outside the stability range dim H_X >= 10");
    const HdgAtomTable& t = hdg_atom_table_cached(cubic_parity(n));
    Int count = 0;
    for (const auto& [atom, mult] : fano_degree_atoms(2 * k, n)) {
        int val = atom == Atom::tate ? 1 : (atom == Atom::h ? t.h : t.sym2);
        count += mult * val;
    }
    if (count != fano::r_formula(k, n))
        throw std::logic_error("hdg_count_F: census disagrees with the closed formula r_k");
    return count;
}

// The displayed five-case count of hdg(H^{2k}(F x F)); the top range mirrors
// the first case.
inline Int hdg_count_FxF_formula(int k, int n) {
    if (k < 0 || k > 4 * n - 8)
        throw std::out_of_range("hdg_count_FxF: k outside 0..4n-8");
    auto r = [n](int i) -> Int {
        if (i < 0 || i > 2 * n - 4) return 0;
        return fano::r_formula(i, n);
    };
    Int conv = 0;
    for (int i = 0; i <= k; ++i) conv += r(i) * r(k - i);
    if (k < n - 2) return conv;
    if (k < 2 * n - 4) return conv + (k - (n - 2) + 1);
    if (k == 2 * n - 4) return conv + (n - 1) + 1;
    if (k <= 3 * n - 6) return conv + (3 * n - 6 - k + 1);
    return conv;
}

// Independent recomputation by expanding H*(F) (x) H*(F) into atoms.
inline Int hdg_count_FxF_expansion(int k, int n) {
    if (cubic_middle_betti(n) < 10)
        throw std::logic_error("hdg_count_FxF: outside the stability range dim H_X >= 10");
    const HdgAtomTable& t = hdg_atom_table_cached(cubic_parity(n));
    Int count = 0;
    for (int u = 0; u <= 2 * k; ++u) {
        int v = 2 * k - u;
        auto au = fano_degree_atoms(u, n);
        auto av = fano_degree_atoms(v, n);
        for (const auto& [a, ma] : au)
            for (const auto& [b, mb] : av) count += ma * mb * hdg_of_pair(a, b, t);
    }
    return count;
}

inline Int hdg_count_FxF(int k, int n) {
    Int formula = hdg_count_FxF_formula(k, n);
    Int expansion = hdg_count_FxF_expansion(k, n);
    if (formula != expansion)
        throw std::logic_error("hdg_count_FxF: internal mismatch between formula and expansion");
    return formula;
}

// ---------------------------------------------------------------------------
// Kuechle c7 fourfolds
// ---------------------------------------------------------------------------

// Diamond of the blow-up of a cubic fourfold Y along a Veronese surface
// S = P^2: h^{p,q} = h^{p,q}(Y) + h^{p-1,q-1}(P^2).
inline HodgeDiamond kuechle_c7_diamond() {
    HodgeDiamond dia = hypersurface_diamond(3, 4);
    for (int p = 1; p <= 3; ++p) dia.add(p, p, 1);
    if (dia.h(1, 1) != 2 || dia.h(2, 2) != 22 || dia.h(3, 1) != 1)
        throw std::logic_error("kuechle_c7_diamond: unexpected Hodge numbers");
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q)
            if (p != q && !(p + q == 4 && (p == 1 || p == 3)) && dia.h(p, q) != 0)
                throw std::logic_error("kuechle_c7_diamond: unexpected off-diagonal entry");
    return dia;
}

struct FanoMiddleReport {
    int n = 0;
    Int b = 0;             // dim H_X
    Int expected = 0;      // b + floor((n+2)/4) for even n, b for odd n
    Int from_poincare = 0; // dim H^{n-2}(F) read off gs_fano_poincare
    bool ok = false;
};

// dim H^{n-2}(F) = dim H_X + floor((n+2)/4) for n even (the Tate part is
// spanned by g^{n/2+1-2i} c^{i-1}), and = dim H_X for n odd.
inline FanoMiddleReport fano_h_n_minus_2_decomposition(int n) {
    if (n < 3) throw std::invalid_argument("fano_h_n_minus_2_decomposition: need n >= 3");
    FanoMiddleReport rep;
    rep.n = n;
    rep.b = cubic_middle_betti(n);
    rep.expected = rep.b + (n % 2 == 0 ? Int((n + 2) / 4) : Int(0));
    rep.from_poincare = gs_fano_poincare(n)[n - 2];
    rep.ok = rep.expected == rep.from_poincare;
    return rep;
}

} // namespace mck::hodge
