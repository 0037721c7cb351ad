#pragma once

// The tautological ring R*(F) = <g, c> of the Fano variety of lines F on a
// smooth cubic n-fold X in P^{n+1}. F sits in G = Gr(2, n+2) with
// [F] = 18 g^2 c + 9 c^2, and R*(F) is realized as the apolar (Gorenstein)
// quotient of Q[g, c] by the kernel of the degree functional
// (x, y) -> deg_G(x y [F]); the ring itself is never presented by guessed
// ideal generators.

#include "mckcert/matrix.hpp"
#include "mckcert/rational.hpp"
#include "mckcert/schubert.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mck::fano {

using exact::Int;
using exact::Mat;
using exact::Rat;
using schubert::SchubertElement;
using schubert::WeightedGCPoly;

struct FanoContext {
    int n = 0;                   // dimension of the cubic X
    SchubertElement fano_class;  // [F] = 18 g^2 c + 9 c^2 in the Schubert basis

    explicit FanoContext(int n_) : n(n_), fano_class(n_ + 2) {
        if (n < 3) throw std::invalid_argument("FanoContext: need n >= 3");
        WeightedGCPoly f;
        f.add(2, 1, 18);
        f.add(0, 2, 9);
        fano_class = f.evaluate(m());
    }

    int m() const { return n + 2; }        // ambient Gr(2, m)
    int dim_f() const { return 2 * n - 4; } // dim F = socle degree of R*(F)
};

// deg_F(g^a c^b) = deg_G(g^a c^b [F]); zero unless a + 2b = 2n - 4.
inline Rat degree_F(int a, int b, const FanoContext& ctx) {
    if (a < 0 || b < 0) return 0;
    if (a + 2 * b != ctx.dim_f()) return 0;
    const int m = ctx.m();
    return Rat(18) * schubert::gc_degree(a + 2, b + 1, m) +
           Rat(9) * schubert::gc_degree(a, b + 2, m);
}

// r_i of the closed dimension formula for R^i(F):
//   r_i = floor((i+2)/2)     for i <= n-2,
//   r_i = floor((2n-2-i)/2)  for i >  n-2.
inline int r_formula(int i, int n) {
    if (i < 0 || i > 2 * n - 4) throw std::out_of_range("r_formula: i outside 0..2n-4");
    return i <= n - 2 ? (i + 2) / 2 : (2 * n - 2 - i) / 2;
}

inline std::vector<std::pair<int, int>> gc_monomials_of_degree(int d) {
    std::vector<std::pair<int, int>> monos;
    for (int b = 0; 2 * b <= d; ++b) monos.push_back({d - 2 * b, b});
    return monos;
}

// Pairing matrix of weighted-degree-i monomials against the complementary
// degree 2n-4-i under the degree functional.
inline Mat pairing_matrix(int i, const FanoContext& ctx) {
    auto rows = gc_monomials_of_degree(i);
    auto cols = gc_monomials_of_degree(ctx.dim_f() - i);
    Mat p(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            p.at(r, c) = degree_F(rows[r].first + cols[c].first,
                                  rows[r].second + cols[c].second, ctx);
    return p;
}

// Hilbert function of the apolar algebra: dim R^i(F) = rank of the pairing
// of degree-i monomials against degree-(2n-4-i) monomials.
inline std::vector<int> taut_hilbert_function(const FanoContext& ctx) {
    std::vector<int> dims;
    for (int i = 0; i <= ctx.dim_f(); ++i)
        dims.push_back(static_cast<int>(exact::rref(pairing_matrix(i, ctx)).rank));
    return dims;
}

// Kernel of the degree-i pairing as g,c-polynomials: the degree-i relations
// that hold in R*(F).
inline std::vector<WeightedGCPoly> taut_kernel(int i, const FanoContext& ctx) {
    auto monos = gc_monomials_of_degree(i);
    auto rk = exact::rank_and_kernel(pairing_matrix(i, ctx));
    std::vector<WeightedGCPoly> out;
    for (const auto& v : rk.kernel) {
        WeightedGCPoly p;
        for (std::size_t j = 0; j < monos.size(); ++j)
            p.add(monos[j].first, monos[j].second, v[j]);
        out.push_back(std::move(p));
    }
    return out;
}

struct SocleRelation {
    int n = 0;
    WeightedGCPoly P;              // weighted degree n-1, g^{n-1}-coefficient 1
    std::vector<Rat> recurrence_p; // p_1 .. p_m, m = floor((n-1)/2)
    std::vector<Rat> recurrence_a; // a_2 .. a_{m+2}
};

inline Rat recurrence_a(int j, int n) {
    Rat a = Rat(exact::binomial(n + 1 - j, j - 1));
    return (j % 2 == 0) ? a : -a;
}

// Solves P(g,c) [F] = 0 in CH^{n+3}(Gr(2, n+2)) over homogeneous P of
// weighted degree n-1. The solution space must be exactly 1-dimensional with
// nonzero g^{n-1}-coefficient; anything else signals a model bug.
inline SocleRelation solve_socle_relation(int n) {
    if (n < 5) throw std::invalid_argument("solve_socle_relation: defined for n >= 5");
    FanoContext ctx(n);
    const int m = ctx.m();

    // Columns: monomials g^{n-1-2j} c^j. Rows: Schubert basis of codegree n+3.
    auto monos = gc_monomials_of_degree(n - 1);
    std::vector<schubert::TwoRowPartition> basis;
    for (int a = 0; a <= m - 2; ++a)
        for (int b = 0; b <= a; ++b)
            if (a + b == n + 3) basis.push_back({a, b});

    Mat sys(basis.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        SchubertElement prod =
            schubert::multiply(WeightedGCPoly::monomial(monos[j].first, monos[j].second)
                                   .evaluate(m),
                               ctx.fano_class);
        for (std::size_t i = 0; i < basis.size(); ++i) sys.at(i, j) = prod.coeff(basis[i]);
    }

    auto rk = exact::rank_and_kernel(sys);
    if (rk.kernel.empty()) throw std::logic_error("solve_socle_relation: no relation");
    if (rk.kernel.size() > 1) throw std::logic_error("solve_socle_relation: ambiguous");

    const auto& v = rk.kernel.front();
    Rat lead = v[0]; // coefficient of g^{n-1} (monomial j = 0)
    if (lead == 0) throw std::logic_error("solve_socle_relation: zero g^{n-1} coefficient");

    SocleRelation rel;
    rel.n = n;
    for (std::size_t j = 0; j < monos.size(); ++j)
        rel.P.add(monos[j].first, monos[j].second, v[j] / lead);

    const int mm = (n - 1) / 2;
    for (int j = 2; j <= mm + 2; ++j) rel.recurrence_a.push_back(recurrence_a(j, n));
    rel.recurrence_p.push_back(rel.recurrence_a[0] / 2); // 2 p_1 = a_2
    for (int j = 2; j <= mm; ++j)
        rel.recurrence_p.push_back((rel.recurrence_a[j - 1] - rel.recurrence_p[j - 2]) / 2);
    return rel;
}

struct RecurrenceReport {
    int n = 0;
    std::vector<Rat> a; // a_2 .. a_{m+2}
    std::vector<Rat> p; // p_1 .. p_m
    bool a_all_integers = false;
    bool p1_matches_closed_form = false;     // p_1 = (n-1)/2
    bool p2_matches_closed_form = false;     // p_2 = -(n^2-4n+5)/4
    bool p_noninteger_from_2 = false;        // p_j not an integer for 2 <= j <= m
    bool contradiction_holds = false;        // p_m != a_{m+2}
    bool ok = false;
};

// The non-divisibility argument behind the socle relation: if P were
// divisible by c, the coefficients p_j would satisfy 2p_1 = a_2,
// 2p_j + p_{j-1} = a_{j+1} and p_m = a_{m+2}; the p_j are forced
// non-integral from j = 2 on, contradicting integrality of the a_j.
inline RecurrenceReport recurrence_check(int n) {
    if (n < 5) throw std::invalid_argument("recurrence_check: defined for n >= 5");
    RecurrenceReport rep;
    rep.n = n;
    const int m = (n - 1) / 2;
    for (int j = 2; j <= m + 2; ++j) rep.a.push_back(recurrence_a(j, n));
    rep.p.push_back(rep.a[0] / 2);
    for (int j = 2; j <= m; ++j) rep.p.push_back((rep.a[j - 1] - rep.p[j - 2]) / 2);

    rep.a_all_integers = true;
    for (const Rat& a : rep.a) rep.a_all_integers = rep.a_all_integers && exact::is_integer(a);
    rep.p1_matches_closed_form = rep.p[0] == Rat(n - 1, 2);
    rep.p2_matches_closed_form =
        m < 2 || rep.p[1] == -Rat(Int(n) * n - 4 * n + 5, 4);
    rep.p_noninteger_from_2 = true;
    for (std::size_t j = 1; j < rep.p.size(); ++j)
        rep.p_noninteger_from_2 = rep.p_noninteger_from_2 && !exact::is_integer(rep.p[j]);
    rep.contradiction_holds = rep.p[m - 1] != rep.a[m]; // p_m vs a_{m+2}
    rep.ok = rep.a_all_integers && rep.p1_matches_closed_form &&
             rep.p2_matches_closed_form && rep.p_noninteger_from_2 &&
             rep.contradiction_holds;
    return rep;
}

// Dimension bound for R^k(F x F) from the linear generating system
//   R*(F) boxtimes R*(F)  +  I * (span{1..g^{n-2}} boxtimes span{1..g^{n-2}})
//   + Q * I^2,
// where I is the incidence correspondence (codimension n-2). The top range
// 3n-6 < k <= 4n-8 mirrors the first case by Gorenstein symmetry of the
// convolution.
inline Int dimRFxF_bound(int k, int n) {
    if (k < 0 || k > 4 * n - 8) throw std::out_of_range("dimRFxF_bound: k outside 0..4n-8");
    auto r = [n](int i) -> Int {
        if (i < 0 || i > 2 * n - 4) return 0;
        return r_formula(i, n);
    };
    Int conv = 0;
    for (int i = 0; i <= k; ++i) conv += r(i) * r(k - i);
    if (k < n - 2) return conv;
    if (k < 2 * n - 4) return conv + (k - (n - 2) + 1);
    if (k == 2 * n - 4) return conv + (n - 1) + 1;
    if (k <= 3 * n - 6) return conv + (3 * n - 6 - k + 1);
    return conv;
}

} // namespace mck::fano
