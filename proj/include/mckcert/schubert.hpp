#pragma once

// Schubert calculus on G = Gr(2, m), the Grassmannian of projective lines in
// P^{m-1}. Classes are Q-linear combinations of two-row Schubert classes
// sigma_{a,b} with m-2 >= a >= b >= 0; g = sigma_{1,0} is the Pluecker class
// and c = sigma_{1,1}. Products are computed by expanding one factor into
// g,c-monomials (every two-row class is a Z-polynomial in g and c) and
// applying the Pieri rule, so no general Littlewood-Richardson machinery is
// needed.

#include "mckcert/matrix.hpp"
#include "mckcert/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mck::schubert {

using exact::Int;
using exact::Mat;
using exact::Rat;

struct TwoRowPartition {
    int a = 0;
    int b = 0;
    int codegree() const { return a + b; }
    friend bool operator==(const TwoRowPartition&, const TwoRowPartition&) = default;
    friend auto operator<=>(const TwoRowPartition& l, const TwoRowPartition& r) {
        if (auto c = l.codegree() <=> r.codegree(); c != 0) return c;
        return l.a <=> r.a;
    }
};

class SchubertElement {
public:
    explicit SchubertElement(int ambient_m) : m_(ambient_m) {
        if (m_ < 3) throw std::invalid_argument("SchubertElement: need m >= 3");
    }

    static SchubertElement unit(int m) {
        SchubertElement e(m);
        e.add_term({0, 0}, 1);
        return e;
    }

    int ambient_m() const { return m_; }
    int box() const { return m_ - 2; } // partitions live in a (m-2) x 2 box

    const std::map<TwoRowPartition, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    void add_term(TwoRowPartition p, const Rat& coeff) {
        if (coeff == 0) return;
        if (p.a < p.b || p.b < 0 || p.a > box())
            throw std::invalid_argument("SchubertElement: partition outside box");
        Rat& c = terms_[p];
        c += coeff;
        if (c == 0) terms_.erase(p);
    }

    Rat coeff(TwoRowPartition p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    SchubertElement& operator+=(const SchubertElement& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }

    SchubertElement& operator*=(const Rat& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [p, c] : terms_) c *= s;
        return *this;
    }

    // Pieri: multiplication by g = sigma_1 adds one box in all valid ways.
    SchubertElement mul_g() const {
        SchubertElement out(m_);
        for (const auto& [p, c] : terms_) {
            if (p.a + 1 <= box()) out.add_term({p.a + 1, p.b}, c);
            if (p.b + 1 <= p.a) out.add_term({p.a, p.b + 1}, c);
        }
        return out;
    }

    // Pieri: multiplication by c = sigma_{1,1} maps sigma_{a,b} to
    // sigma_{a+1,b+1}, dropping the term when a+1 exceeds the box.
    SchubertElement mul_c() const {
        SchubertElement out(m_);
        for (const auto& [p, c] : terms_)
            if (p.a + 1 <= box()) out.add_term({p.a + 1, p.b + 1}, c);
        return out;
    }

    // Coefficient of the point class sigma_{m-2,m-2}; zero for anything not
    // in top codegree.
    Rat degree() const { return coeff({box(), box()}); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            Rat a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1) os << a << "*";
            os << "σ_{" << p.a << "," << p.b << "}";
        }
        return os.str();
    }

private:
    int m_;
    std::map<TwoRowPartition, Rat> terms_;
};

inline SchubertElement pieri_multiply(const SchubertElement& e, char special) {
    if (special == 'g') return e.mul_g();
    if (special == 'c') return e.mul_c();
    throw std::invalid_argument("pieri_multiply: special class must be 'g' or 'c'");
}

// Class of g^a c^b in CH^{a+2b}(Gr(2,m)); zero when the weighted degree
// exceeds the dimension 2(m-2).
inline SchubertElement gc_monomial_to_schubert(int a, int b, int m) {
    if (a < 0 || b < 0) throw std::invalid_argument("gc_monomial: negative exponent");
    SchubertElement e = SchubertElement::unit(m);
    for (int i = 0; i < b; ++i) e = e.mul_c();
    for (int i = 0; i < a; ++i) e = e.mul_g();
    return e;
}

inline Rat degree_G(const SchubertElement& e) { return e.degree(); }

// Push-forward to a point of g^a c^b, i.e. the intersection number
// integral_G g^a c^b when a+2b = 2(m-2), zero otherwise.
inline Rat gc_degree(int a, int b, int m) {
    return degree_G(gc_monomial_to_schubert(a, b, m));
}

// Polynomials in g (weighted degree 1) and c (weighted degree 2).
class WeightedGCPoly {
public:
    using Key = std::pair<int, int>; // (g-exponent, c-exponent)

    WeightedGCPoly() = default;

    static WeightedGCPoly monomial(int a, int b, const Rat& coeff = 1) {
        WeightedGCPoly p;
        p.add(a, b, coeff);
        return p;
    }

    const std::map<Key, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(int a, int b, const Rat& coeff) {
        if (coeff == 0) return;
        if (a < 0 || b < 0) throw std::invalid_argument("WeightedGCPoly: negative exponent");
        Rat& c = coeffs_[{a, b}];
        c += coeff;
        if (c == 0) coeffs_.erase({a, b});
    }

    Rat coeff(int a, int b) const {
        auto it = coeffs_.find({a, b});
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    WeightedGCPoly& operator+=(const WeightedGCPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
        return *this;
    }

    WeightedGCPoly& operator*=(const Rat& s) {
        if (s == 0) { coeffs_.clear(); return *this; }
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }

    WeightedGCPoly operator*(const WeightedGCPoly& o) const {
        WeightedGCPoly p;
        for (const auto& [k1, c1] : coeffs_)
            for (const auto& [k2, c2] : o.coeffs_)
                p.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return p;
    }

    // True iff all monomials share one weighted degree; returns it (or -1
    // for the zero polynomial).
    int homogeneous_degree() const {
        int d = -1;
        for (const auto& [k, c] : coeffs_) {
            int w = k.first + 2 * k.second;
            if (d == -1) d = w;
            else if (d != w) throw std::logic_error("WeightedGCPoly: not homogeneous");
        }
        return d;
    }

    SchubertElement evaluate(int m) const {
        SchubertElement e(m);
        for (const auto& [k, c] : coeffs_) {
            SchubertElement mono = gc_monomial_to_schubert(k.first, k.second, m);
            mono *= c;
            e += mono;
        }
        return e;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        // highest g-power first, matching the usual display of the relations
        std::vector<std::pair<Key, Rat>> items(coeffs_.begin(), coeffs_.end());
        std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
            if (l.first.first != r.first.first) return l.first.first > r.first.first;
            return l.first.second < r.first.second;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c0] : items) {
            Rat c = c0;
            if (!first) {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            const bool has_var = k.first > 0 || k.second > 0;
            if (c != 1 || !has_var) os << c;
            if (k.first > 0) { os << "g"; if (k.first > 1) os << "^" << k.first; }
            if (k.second > 0) { os << "c"; if (k.second > 1) os << "^" << k.second; }
        }
        return os.str();
    }

private:
    std::map<Key, Rat> coeffs_;
};

// Complete homogeneous class sigma_k of the rank-2 tautological situation as
// a polynomial in g, c: sigma_k = sum_j (-1)^j C(k-j, j) g^{k-2j} c^j.
inline WeightedGCPoly one_row_gc_poly(int k) {
    WeightedGCPoly p;
    for (int j = 0; 2 * j <= k; ++j) {
        Int b = exact::binomial(k - j, j);
        if (b == 0) continue;
        p.add(k - 2 * j, j, (j % 2 == 0) ? Rat(b) : -Rat(b));
    }
    return p;
}

// Giambelli for two-row classes: sigma_{a,b} = sigma_a sigma_b -
// sigma_{a+1} sigma_{b-1}, with the one-row classes expanded in g, c.
inline WeightedGCPoly schubert_to_gc_poly(TwoRowPartition p) {
    WeightedGCPoly out = one_row_gc_poly(p.a) * one_row_gc_poly(p.b);
    if (p.b >= 1) {
        WeightedGCPoly corr = one_row_gc_poly(p.a + 1) * one_row_gc_poly(p.b - 1);
        corr *= Rat(-1);
        out += corr;
    }
    return out;
}

// Product of two arbitrary elements: expand the first into g,c-monomials,
// then apply Pieri repeatedly to the second.
inline SchubertElement multiply(const SchubertElement& x, const SchubertElement& y) {
    SchubertElement out(x.ambient_m());
    for (const auto& [p, cx] : x.terms()) {
        WeightedGCPoly poly = schubert_to_gc_poly(p);
        for (const auto& [k, cp] : poly.coeffs()) {
            SchubertElement t = y;
            for (int i = 0; i < k.second; ++i) t = t.mul_c();
            for (int i = 0; i < k.first; ++i) t = t.mul_g();
            t *= cx * cp;
            out += t;
        }
    }
    return out;
}

// The two generators of the ideal of relations of CH*(Gr(2, n+2)):
//   R_{n+1}(g,c) = g^{n+1} - C(n,1) g^{n-1} c + C(n-1,2) g^{n-3} c^2 - ...
//   R_{n+2}(g,c) = g^{n+2} - C(n+1,1) g^n c + C(n,2) g^{n-2} c^2 - ...
// i.e. the one-row classes sigma_{n+1}, sigma_{n+2} as polynomials in g, c.
inline std::pair<WeightedGCPoly, WeightedGCPoly> presentation_relations(int n) {
    if (n < 1) throw std::invalid_argument("presentation_relations: need n >= 1");
    return {one_row_gc_poly(n + 1), one_row_gc_poly(n + 2)};
}

struct PresentationDegreeRow {
    int degree = 0;
    std::size_t monomial_count = 0;   // g,c-monomials of this weighted degree
    std::size_t monomial_rank = 0;    // rank of their Schubert expansions
    std::size_t schubert_count = 0;   // two-row partitions in the box
    std::size_t relation_span = 0;    // span of R_{n+1}, R_{n+2} multiples
    std::size_t kernel_dim = 0;       // kernel of the monomial matrix
    bool ok = false;
};

struct PresentationReport {
    int n = 0;
    bool relations_vanish = false;
    std::vector<PresentationDegreeRow> rows;
    bool ok = false;
};

// Verifies that R_{n+1}, R_{n+2} vanish in the Schubert model of Gr(2, n+2)
// and that in every codegree d <= 2n the g,c-monomials span CH^d with kernel
// exactly the degree-d slice of the ideal they generate.
inline PresentationReport verify_presentation(int n) {
    PresentationReport rep;
    rep.n = n;
    const int m = n + 2;
    auto [r1, r2] = presentation_relations(n);
    rep.relations_vanish = r1.evaluate(m).is_zero() && r2.evaluate(m).is_zero();

    rep.ok = rep.relations_vanish;
    for (int d = 0; d <= 2 * n; ++d) {
        PresentationDegreeRow row;
        row.degree = d;

        std::vector<std::pair<int, int>> monos; // (a, b), a + 2b = d
        for (int b = 0; 2 * b <= d; ++b) monos.push_back({d - 2 * b, b});
        row.monomial_count = monos.size();

        std::vector<TwoRowPartition> basis;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= a; ++b)
                if (a + b == d) basis.push_back({a, b});
        row.schubert_count = basis.size();

        // columns = monomials, rows = Schubert coordinates, so the kernel
        // consists of polynomial relations among the monomials
        Mat mat(basis.size(), monos.size());
        for (std::size_t i = 0; i < monos.size(); ++i) {
            SchubertElement e = gc_monomial_to_schubert(monos[i].first, monos[i].second, m);
            for (std::size_t j = 0; j < basis.size(); ++j) mat.at(j, i) = e.coeff(basis[j]);
        }
        auto rk = exact::rank_and_kernel(mat);
        row.monomial_rank = rk.rank;
        row.kernel_dim = rk.kernel.size();

        // Degree-d multiples of the two relations, in monomial coordinates.
        std::vector<std::vector<Rat>> rel_vecs;
        auto add_multiples = [&](const WeightedGCPoly& rel, int reldeg) {
            for (int bb = 0; 2 * bb <= d - reldeg; ++bb) {
                int aa = d - reldeg - 2 * bb;
                if (aa < 0) continue;
                WeightedGCPoly mult = WeightedGCPoly::monomial(aa, bb) * rel;
                std::vector<Rat> v(monos.size());
                for (std::size_t i = 0; i < monos.size(); ++i)
                    v[i] = mult.coeff(monos[i].first, monos[i].second);
                rel_vecs.push_back(std::move(v));
            }
        };
        add_multiples(r1, n + 1);
        add_multiples(r2, n + 2);
        row.relation_span = exact::span_rank(rel_vecs);

        row.ok = row.monomial_rank == row.schubert_count &&
                 exact::same_span(rel_vecs, rk.kernel);
        rep.ok = rep.ok && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace mck::schubert
