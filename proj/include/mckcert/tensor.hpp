#pragma once

// Exact tensor calculus over a model of H*(X) for X a smooth cubic n-fold
// (or any hypersurface-like space): Tate classes h^0..h^n with
// integral(h^n) = s, plus an abstract primitive part of rank b in the middle
// degree carrying a fixed nondegenerate form, symmetric for n even and
// alternating for n odd. Classes on X^k are sparse tensors in the induced
// basis; all products and contractions carry Koszul signs, centralized in
// Tensor::mul and Tensor::permuted.

#include "mckcert/hodge.hpp"
#include "mckcert/matrix.hpp"
#include "mckcert/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mck::motive {

using exact::Int;
using exact::Mat;
using exact::Rat;

class CohModel {
public:
    // n: complex dimension; point_degree: integral of h^n; prim_rank: rank
    // of the middle primitive part.
    CohModel(int n, Rat point_degree, int prim_rank)
        : n_(n), scale_(std::move(point_degree)), b_(prim_rank) {
        if (n_ < 1) throw std::invalid_argument("CohModel: need n >= 1");
        if (scale_ == 0) throw std::invalid_argument("CohModel: point degree must be nonzero");
        if (n_ % 2 == 1 && b_ % 2 == 1)
            throw std::invalid_argument("CohModel: odd-parity primitive part needs even rank");
    }

    static CohModel cubic(int n) { return CohModel(n, 3, hodge::cubic_middle_betti(n)); }
    static CohModel projective_space(int n) { return CohModel(n, 1, 0); }

    int n() const { return n_; }
    int prim_rank() const { return b_; }
    const Rat& point_degree() const { return scale_; }
    int dim() const { return n_ + 1 + b_; }

    bool is_tate(int u) const { return u <= n_; }
    int top() const { return n_; } // basis index of h^n

    // real cohomological degree of a basis element
    int degree(int u) const { return is_tate(u) ? 2 * u : n_; }
    bool is_odd(int u) const { return degree(u) % 2 != 0; }

    // Primitive form: identity for even n, standard symplectic for odd n.
    Rat prim_form(int a, int b) const {
        if (n_ % 2 == 0) return a == b ? 1 : 0;
        if (a / 2 != b / 2 || a == b) return 0;
        return a % 2 == 0 ? 1 : -1;
    }
    Rat prim_form_inv(int a, int b) const {
        if (n_ % 2 == 0) return a == b ? 1 : 0;
        if (a / 2 != b / 2 || a == b) return 0;
        return a % 2 == 0 ? -1 : 1;
    }

    // Product of basis elements in the model ring: h^a h^b = h^{a+b} (or 0
    // past the top), h^a e = 0 for a >= 1, e_a e_b = (Phi_ab / s) h^n.
    std::optional<std::pair<int, Rat>> product(int u, int v) const {
        if (is_tate(u) && is_tate(v)) {
            int w = u + v;
            if (w > n_) return std::nullopt;
            return std::make_pair(w, Rat(1));
        }
        if (is_tate(u)) return u == 0 ? std::make_optional(std::make_pair(v, Rat(1))) : std::nullopt;
        if (is_tate(v)) return v == 0 ? std::make_optional(std::make_pair(u, Rat(1))) : std::nullopt;
        Rat phi = prim_form(u - n_ - 1, v - n_ - 1);
        if (phi == 0) return std::nullopt;
        return std::make_pair(n_, phi / scale_);
    }

    // integral over X of a basis element: nonzero only at h^n
    Rat integral(int u) const { return u == n_ ? scale_ : Rat(0); }

    Rat pairing(int u, int v) const {
        auto p = product(u, v);
        if (!p) return 0;
        return p->second * integral(p->first);
    }

    // the unique basis partner with nonzero pairing (identity / symplectic
    // forms pair each basis element with exactly one other)
    int partner(int u) const {
        if (is_tate(u)) return n_ - u;
        int a = u - n_ - 1;
        if (n_ % 2 == 0) return u;
        return n_ + 1 + (a % 2 == 0 ? a + 1 : a - 1);
    }

    std::string basis_name(int u) const {
        std::ostringstream os;
        if (is_tate(u)) {
            if (u == 0) os << "1";
            else { os << "h"; if (u > 1) os << "^" << u; }
        } else {
            os << "e" << (u - n_);
        }
        return os.str();
    }

private:
    int n_;
    Rat scale_;
    int b_;
};

class Tensor {
public:
    using Key = std::vector<int>;

    Tensor(const CohModel* model, int arity) : model_(model), arity_(arity) {
        if (arity < 1 || arity > 5) throw std::invalid_argument("Tensor: arity outside 1..5");
    }

    static Tensor basis(const CohModel* m, Key idx) {
        Tensor t(m, static_cast<int>(idx.size()));
        t.add_term(std::move(idx), 1);
        return t;
    }

    const CohModel* model() const { return model_; }
    int arity() const { return arity_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(Key idx, const Rat& c) {
        if (static_cast<int>(idx.size()) != arity_)
            throw std::invalid_argument("Tensor: key arity mismatch");
        accumulate(idx, c);
    }

    Tensor& operator+=(const Tensor& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) accumulate(k, c);
        return *this;
    }

    Tensor& operator-=(const Tensor& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) accumulate(k, -c);
        return *this;
    }

    Tensor& operator*=(const Rat& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { a += b; return a; }
    friend Tensor operator-(Tensor a, const Tensor& b) { a -= b; return a; }

    bool operator==(const Tensor& o) const {
        return model_ == o.model_ && arity_ == o.arity_ && terms_ == o.terms_;
    }

    // Graded product of classes on the same X^k. The Koszul sign moves each
    // factor of the right operand past the tail of the left operand:
    // exponent = sum_i deg(b_i) * sum_{j>i} deg(a_j).
    Tensor mul(const Tensor& o) const {
        check_compatible(o);
        Tensor out(model_, arity_);
        std::vector<int> prod(arity_);
        for (const auto& [a, ca] : terms_) {
            // suffix degree parities of a
            int suffix = 0;
            std::vector<int> suf(arity_ + 1, 0);
            for (int j = arity_ - 1; j >= 0; --j) {
                suffix ^= model_->degree(a[j]) & 1;
                suf[j] = suffix;
            }
            for (const auto& [b, cb] : o.terms_) {
                Rat coeff = ca * cb;
                int sign = 0;
                bool dead = false;
                for (int i = 0; i < arity_ && !dead; ++i) {
                    auto p = model_->product(a[i], b[i]);
                    if (!p) { dead = true; break; }
                    prod[i] = p->first;
                    if (p->second != 1) coeff *= p->second;
                    if ((model_->degree(b[i]) & 1) != 0) sign ^= suf[i + 1];
                }
                if (dead) continue;
                out.accumulate(prod, sign ? -coeff : coeff);
            }
        }
        return out;
    }

    // Pull back along the projection X^{new_arity} -> X^{arity} selecting
    // `slots` (strictly increasing): insert fundamental classes elsewhere.
    Tensor pullback(int new_arity, const std::vector<int>& slots) const {
        if (static_cast<int>(slots.size()) != arity_)
            throw std::invalid_argument("pullback: slot count mismatch");
        Tensor out(model_, new_arity);
        for (const auto& [k, c] : terms_) {
            Key idx(new_arity, 0);
            for (int i = 0; i < arity_; ++i) idx[slots[i]] = k[i];
            out.accumulate(idx, c);
        }
        return out;
    }

    // Push forward along the projection dropping `slots` (integrate them).
    // Only top-degree (even) classes integrate, so no sign appears.
    Tensor integrate(const std::vector<int>& slots) const {
        std::vector<bool> drop(arity_, false);
        for (int s : slots) drop[s] = true;
        Tensor out(model_, arity_ - static_cast<int>(slots.size()));
        for (const auto& [k, c] : terms_) {
            Rat coeff = c;
            Key idx;
            bool dead = false;
            for (int i = 0; i < arity_; ++i) {
                if (drop[i]) {
                    Rat f = model_->integral(k[i]);
                    if (f == 0) { dead = true; break; }
                    coeff *= f;
                } else {
                    idx.push_back(k[i]);
                }
            }
            if (!dead) out.accumulate(idx, coeff);
        }
        return out;
    }

    // integral over X^arity
    Rat integral_all() const {
        Rat r = 0;
        for (const auto& [k, c] : terms_) {
            Rat coeff = c;
            for (int i = 0; i < arity_; ++i) {
                Rat f = model_->integral(k[i]);
                if (f == 0) { coeff = 0; break; }
                coeff *= f;
            }
            r += coeff;
        }
        return r;
    }

    // Apply a permutation of the factors: slot i of the result is slot
    // perm[i] of the source; Koszul sign from the crossings of odd factors.
    Tensor permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != arity_)
            throw std::invalid_argument("permuted: size mismatch");
        Tensor out(model_, arity_);
        for (const auto& [k, c] : terms_) {
            Key idx(arity_);
            for (int i = 0; i < arity_; ++i) idx[i] = k[perm[i]];
            int sign = 0;
            for (int i = 0; i < arity_; ++i)
                for (int j = i + 1; j < arity_; ++j)
                    if (perm[i] > perm[j])
                        sign ^= (model_->degree(k[perm[i]]) & 1) & (model_->degree(k[perm[j]]) & 1);
            out.accumulate(idx, sign ? -c : c);
        }
        return out;
    }

    Tensor transposed() const {
        if (arity_ != 2) throw std::invalid_argument("transposed: arity 2 only");
        return permuted({1, 0});
    }

    std::string to_string(std::size_t max_terms = 12) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        std::size_t shown = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (shown++ == max_terms) { os << " + ... (" << terms_.size() << " terms)"; break; }
            Rat a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            } else if (a < 0) { os << "-"; a = -a; }
            first = false;
            if (a != 1) os << a << "*";
            for (int i = 0; i < arity_; ++i) {
                if (i) os << "×";
                os << model_->basis_name(k[i]);
            }
        }
        return os.str();
    }

private:
    void check_compatible(const Tensor& o) const {
        if (model_ != o.model_ || arity_ != o.arity_)
            throw std::invalid_argument("Tensor: model/arity mismatch");
    }

    void accumulate(const Key& k, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const CohModel* model_;
    int arity_;
    std::map<Key, Rat> terms_;
};

// Kuenneth expansion of the diagonal class of X x X:
//   Delta = sum_i (1/s) h^i x h^{n-i} + sum_{a,b} (Phi^{-1})_{ab} e_a x e_b.
inline Tensor diagonal(const CohModel& m) {
    Tensor d(&m, 2);
    Rat inv_s = Rat(1) / m.point_degree();
    for (int i = 0; i <= m.n(); ++i) d.add_term({i, m.n() - i}, inv_s);
    for (int a = 0; a < m.prim_rank(); ++a)
        for (int b = 0; b < m.prim_rank(); ++b) {
            Rat c = m.prim_form_inv(a, b);
            if (c != 0) d.add_term({m.n() + 1 + a, m.n() + 1 + b}, c);
        }
    return d;
}

// Class of the small diagonal of X^3, realized as the product of two
// partial diagonals.
inline Tensor small_diagonal(const CohModel& m) {
    Tensor d = diagonal(m);
    return d.pullback(3, {0, 1}).mul(d.pullback(3, {1, 2}));
}

// g \circ f for correspondences: f in H(X^{f_src} x X^q) viewed
// X^{f_src} -> X^q, g in H(X^q x X^{g_tgt}) viewed X^q -> X^{g_tgt}.
inline Tensor compose(const Tensor& f, int f_src, const Tensor& g) {
    int q = f.arity() - f_src;
    int g_tgt = g.arity() - q;
    if (q < 1 || g_tgt < 1) throw std::invalid_argument("compose: arity mismatch");
    int total = f_src + q + g_tgt;
    std::vector<int> fslots(f.arity()), gslots(g.arity()), mid(q);
    for (int i = 0; i < f.arity(); ++i) fslots[i] = i;
    for (int i = 0; i < g.arity(); ++i) gslots[i] = f_src + i;
    for (int i = 0; i < q; ++i) mid[i] = f_src + i;
    return f.pullback(total, fslots).mul(g.pullback(total, gslots)).integrate(mid);
}

// usual composition of self-correspondences: g after f
inline Tensor compose(const Tensor& f, const Tensor& g) { return compose(f, 1, g); }

// Action of a correspondence f: X^{src} -> X^{tgt} on a class of X^{src}:
// f_*(x) = p_{tgt,*}(f . p_src^*(x)).
inline Tensor act(const Tensor& f, int src, const Tensor& x) {
    if (x.arity() != src) throw std::invalid_argument("act: source arity mismatch");
    std::vector<int> sslots(src), mid(src);
    for (int i = 0; i < src; ++i) { sslots[i] = i; mid[i] = i; }
    return f.mul(x.pullback(f.arity(), sslots)).integrate(mid);
}

inline Tensor act(const Tensor& f, const Tensor& x) { return act(f, 1, x); }

// Realization of a self-correspondence as a matrix on the model basis
// (column u holds the image of basis element u).
inline Mat realize_matrix(const Tensor& f) {
    const CohModel& m = *f.model();
    Mat out(m.dim(), m.dim());
    for (int u = 0; u < m.dim(); ++u) {
        Tensor img = act(f, Tensor::basis(&m, {u}));
        for (const auto& [k, c] : img.terms()) out.at(k[0], u) = c;
    }
    return out;
}

// External product of correspondences f, g: X -> X as a correspondence
// X^2 -> X^2 (slots 0,1 sources; 2,3 targets).
inline Tensor external_product(const Tensor& f, const Tensor& g) {
    return f.pullback(4, {0, 2}).mul(g.pullback(4, {1, 3}));
}

} // namespace mck::motive
