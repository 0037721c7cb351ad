#pragma once

// Correspondence calculus over the model cohomology of a cubic n-fold:
// symbolic classes on X^k (k <= 3) built from h-power boxes, partial
// diagonals and the small diagonal, together with their exact tensor
// realizations; construction and verification of the Chow-Kuenneth
// projectors pi^{2i} = (1/3) h^{n-i} x h^i, pi^n = Delta - sum, the
// multiplicativity obstructions pi^k o delta o (pi^i (x) pi^j), and the
// Gram-rank checks on the generically defined subrings <h> and
// <p_1^*h, p_2^*h, Delta>.

#include "mckcert/matrix.hpp"
#include "mckcert/rational.hpp"
#include "mckcert/tensor.hpp"

#include <array>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mck::motive {

// ---------------------------------------------------------------------------
// Symbolic correspondence classes
// ---------------------------------------------------------------------------

// One symbolic term: a product of h-powers over the factors, optionally
// multiplied by a diagonal atom. diag = -1: none; for arity 2, diag = 0 is
// Delta_{12}; for arity 3, diag in {0,1,2} picks Delta_{12}, Delta_{13},
// Delta_{23} and diag = 3 is the small diagonal.
struct CorrTerm {
    int diag = -1;
    std::array<int, 3> h{0, 0, 0};
    Rat coeff = 1;
};

class CorrClass {
public:
    CorrClass(const CohModel* model, int arity) : model_(model), arity_(arity) {
        if (arity < 1 || arity > 3) throw std::invalid_argument("CorrClass: arity outside 1..3");
    }

    static CorrClass h_box(const CohModel* m, std::vector<int> exps, const Rat& coeff = 1) {
        CorrClass c(m, static_cast<int>(exps.size()));
        CorrTerm t;
        for (std::size_t i = 0; i < exps.size(); ++i) t.h[i] = exps[i];
        t.coeff = coeff;
        c.terms_.push_back(t);
        return c;
    }

    static CorrClass diagonal_class(const CohModel* m) {
        CorrClass c(m, 2);
        c.terms_.push_back(CorrTerm{0, {0, 0, 0}, 1});
        return c;
    }

    static CorrClass small_diagonal_class(const CohModel* m) {
        CorrClass c(m, 3);
        c.terms_.push_back(CorrTerm{3, {0, 0, 0}, 1});
        return c;
    }

    const CohModel* model() const { return model_; }
    int arity() const { return arity_; }
    const std::vector<CorrTerm>& terms() const { return terms_; }

    void add_term(CorrTerm t) {
        if (t.coeff != 0) terms_.push_back(std::move(t));
    }

    CorrClass& operator+=(const CorrClass& o) {
        for (const auto& t : o.terms_) terms_.push_back(t);
        return *this;
    }

    CorrClass& operator*=(const Rat& s) {
        for (auto& t : terms_) t.coeff *= s;
        return *this;
    }

    // The tensor expansion is recomputed from the symbolic terms on every
    // call; it is never cached, so it cannot go stale.
    Tensor realize() const {
        Tensor out(model_, arity_);
        for (const auto& t : terms_) {
            std::vector<int> key(arity_);
            for (int i = 0; i < arity_; ++i) {
                if (t.h[i] > model_->n()) { key.clear(); break; } // h^{>n} = 0
                key[i] = t.h[i];
            }
            if (key.empty() && arity_ > 0) continue;
            Tensor box = Tensor::basis(model_, key);
            box *= t.coeff;
            if (t.diag < 0) {
                out += box;
            } else if (arity_ == 2) {
                out += diagonal(*model_).mul(box);
            } else {
                Tensor d = (t.diag == 3) ? small_diagonal(*model_)
                                         : diagonal(*model_).pullback(3, diag_slots(t.diag));
                out += d.mul(box);
            }
        }
        return out;
    }

    // transpose of a self-correspondence, symbolically
    CorrClass transposed() const {
        if (arity_ != 2) throw std::invalid_argument("CorrClass::transposed: arity 2 only");
        CorrClass out(model_, 2);
        for (const auto& t : terms_) {
            CorrTerm s = t;
            std::swap(s.h[0], s.h[1]);
            out.terms_.push_back(s);
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rat c = t.coeff;
            if (!first) {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            } else if (c < 0) { os << "-"; c = -c; }
            first = false;
            if (c != 1) os << c << "*";
            bool printed = false;
            if (t.diag >= 0) {
                if (arity_ == 2 || t.diag == 3) os << (arity_ == 2 ? "Δ" : "δ");
                else {
                    auto s = diag_slots(t.diag);
                    os << "Δ_{" << s[0] + 1 << s[1] + 1 << "}";
                }
                printed = true;
            }
            for (int i = 0; i < arity_; ++i) {
                if (t.h[i] == 0) continue;
                if (printed) os << "·";
                os << "p" << i + 1 << "*h";
                if (t.h[i] > 1) os << "^" << t.h[i];
                printed = true;
            }
            if (!printed) os << "1";
        }
        return os.str();
    }

private:
    static std::vector<int> diag_slots(int diag) {
        switch (diag) {
            case 0: return {0, 1};
            case 1: return {0, 2};
            case 2: return {1, 2};
            default: throw std::logic_error("diag_slots");
        }
    }

    const CohModel* model_;
    int arity_;
    std::vector<CorrTerm> terms_;
};

// ---------------------------------------------------------------------------
// Chow-Kuenneth projectors for cubic hypersurfaces
// ---------------------------------------------------------------------------

struct ProjectorSet {
    int n = 0;
    std::shared_ptr<const CohModel> owned_model; // set when built from n alone
    const CohModel* model = nullptr;
    std::vector<CorrClass> projectors; // pi^0 .. pi^{2n}

    const CorrClass& pi(int i) const { return projectors.at(i); }
};

// pi^{2i} = (1/3) h^{n-i} x h^i for 2i != n, pi^n = Delta - sum of the
// others, all odd projectors zero.
inline ProjectorSet ck_projectors_cubic(const CohModel& m) {
    const int n = m.n();
    ProjectorSet ps;
    ps.n = n;
    ps.model = &m;
    Rat third = Rat(1) / m.point_degree();
    for (int k = 0; k <= 2 * n; ++k) {
        if (k % 2 == 1 || k == n) {
            ps.projectors.push_back(CorrClass(&m, 2));
            continue;
        }
        int i = k / 2;
        ps.projectors.push_back(CorrClass::h_box(&m, {n - i, i}, third));
    }
    CorrClass mid = CorrClass::diagonal_class(&m);
    for (int i = 0; 2 * i <= 2 * n; ++i) {
        if (2 * i == n) continue;
        mid += CorrClass::h_box(&m, {n - i, i}, -third);
    }
    ps.projectors[n] = mid;
    return ps;
}

inline ProjectorSet ck_projectors_cubic(int n) {
    auto m = std::make_shared<CohModel>(CohModel::cubic(n));
    ProjectorSet ps = ck_projectors_cubic(*m);
    ps.owned_model = std::move(m);
    return ps;
}

struct CkAxiomReport {
    bool idempotent = true;
    bool orthogonal = true;
    bool complete = true;
    bool kunneth = true;
    std::vector<std::string> failures;
    bool ok() const { return idempotent && orthogonal && complete && kunneth; }
};

// Checks, in the exact tensor model: pi^i o pi^i = pi^i, pi^i o pi^j = 0 for
// i != j, sum pi^i = Delta, and that pi^i acts as the identity on degree-i
// model cohomology and as zero elsewhere.
inline CkAxiomReport verify_ck_axioms(const ProjectorSet& ps) {
    CkAxiomReport rep;
    const CohModel& m = *ps.model;
    const int count = 2 * ps.n + 1;
    std::vector<Tensor> t;
    t.reserve(count);
    for (int i = 0; i < count; ++i) t.push_back(ps.pi(i).realize());

    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            Tensor c = compose(t[j], t[i]); // pi^i after pi^j
            if (i == j) {
                if (!(c == t[i])) {
                    rep.idempotent = false;
                    rep.failures.push_back("pi^" + std::to_string(i) + " not idempotent");
                }
            } else if (!c.is_zero()) {
                rep.orthogonal = false;
                rep.failures.push_back("pi^" + std::to_string(i) + " o pi^" + std::to_string(j) +
                                       " != 0");
            }
        }

    Tensor sum(&m, 2);
    for (const auto& x : t) sum += x;
    if (!(sum == diagonal(m))) {
        rep.complete = false;
        rep.failures.push_back("sum of projectors != Delta");
    }

    for (int i = 0; i < count; ++i) {
        for (int u = 0; u < m.dim(); ++u) {
            Tensor img = act(t[i], Tensor::basis(&m, {u}));
            Tensor expect(&m, 1);
            if (m.degree(u) == i) expect.add_term({u}, 1);
            if (!(img == expect)) {
                rep.kunneth = false;
                rep.failures.push_back("pi^" + std::to_string(i) +
                                       " does not project H^" + std::to_string(i));
                break;
            }
        }
    }
    return rep;
}

// MCK decompositions are self-dual: t(pi^i) = pi^{2n-i}.
inline bool verify_self_duality(const ProjectorSet& ps) {
    for (int i = 0; i <= 2 * ps.n; ++i)
        if (!(ps.pi(i).realize().transposed() == ps.pi(2 * ps.n - i).realize())) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Multiplicativity obstructions
// ---------------------------------------------------------------------------

struct ObstructionResult {
    int i = 0, j = 0, k = 0, n = 0;
    Tensor obstruction;       // pi^k o delta o (pi^i (x) pi^j), arity 3
    Tensor symmetrized;       // same with pi^i (x) pi^j + pi^j (x) pi^i
    bool vanishes = false;
    bool symmetrized_vanishes = false;
    bool condition_iii = false; // for k = i+j: pi^{i+j} o delta o (...) = delta o (...)
};

// delta o (pi^i (x) pi^j) as a correspondence X^2 -> X, arity 3.
inline Tensor delta_after_product(const ProjectorSet& ps, int i, int j) {
    const CohModel& m = *ps.model;
    Tensor prod = external_product(ps.pi(i).realize(), ps.pi(j).realize());
    return compose(prod, 2, small_diagonal(m));
}

inline ObstructionResult mck_obstruction(const ProjectorSet& ps, int i, int j, int k) {
    const CohModel& m = *ps.model;
    ObstructionResult res{i, j, k, ps.n, Tensor(&m, 3), Tensor(&m, 3)};
    Tensor base = delta_after_product(ps, i, j);
    Tensor base_sym = base + delta_after_product(ps, j, i);
    Tensor pk = ps.pi(k).realize();
    res.obstruction = compose(base, 2, pk);
    res.symmetrized = compose(base_sym, 2, pk);
    res.vanishes = res.obstruction.is_zero();
    res.symmetrized_vanishes = res.symmetrized.is_zero();
    if (k == i + j) res.condition_iii = (res.obstruction == base);
    return res;
}

struct MckSweepReport {
    int n = 0;
    long triples_checked = 0;
    std::vector<std::array<int, 3>> failures;        // k != i+j with nonzero class
    std::vector<std::array<int, 3>> cond3_failures;  // k = i+j where (iii) fails
    bool ok() const { return failures.empty() && cond3_failures.empty(); }
};

inline MckSweepReport mck_sweep(const ProjectorSet& ps) {
    MckSweepReport rep;
    rep.n = ps.n;
    const int count = 2 * ps.n + 1;
    std::vector<Tensor> pk;
    pk.reserve(count);
    for (int k = 0; k < count; ++k) pk.push_back(ps.pi(k).realize());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            Tensor base = delta_after_product(ps, i, j);
            for (int k = 0; k < count; ++k) {
                Tensor obs = compose(base, 2, pk[k]);
                ++rep.triples_checked;
                if (k != i + j) {
                    if (!obs.is_zero()) rep.failures.push_back({i, j, k});
                } else if (!(obs == base)) {
                    rep.cond3_failures.push_back({i, j, k});
                }
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Chern classes and the degree-(n+1) relation on X x X
// ---------------------------------------------------------------------------

// Total Chern class of the cubic n-fold: c(T_X) = (1+h)^{n+2} / (1+3h)
// truncated at h^n; returns the coefficient of h^i at index i.
inline std::vector<Rat> chern_cubic(int n) {
    if (n < 1) throw std::invalid_argument("chern_cubic: need n >= 1");
    std::vector<Rat> c(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        Rat v = 0;
        Rat pw = 1; // (-3)^k
        for (int k = 0; k <= i; ++k) {
            v += Rat(exact::binomial(n + 2, i - k)) * pw;
            pw *= -3;
        }
        c[i] = v;
    }
    return c;
}

inline Rat chern_top_degree(int n) { return Rat(3) * chern_cubic(n)[n]; }

struct RelationX2Report {
    int n = 0;
    bool holds = false;
    Tensor lhs1, lhs2, rhs;
};

// Delta . p_1^*h = Delta . p_2^*h = (1/3) sum_{i+j=n+1, i,j>0} h^i x h^j
// in the model of X x X.
inline RelationX2Report relation_X2(const CohModel& m) {
    const int n = m.n();
    RelationX2Report rep{n, false, Tensor(&m, 2), Tensor(&m, 2), Tensor(&m, 2)};
    Tensor d = diagonal(m);
    rep.lhs1 = d.mul(Tensor::basis(&m, {1, 0}));
    rep.lhs2 = d.mul(Tensor::basis(&m, {0, 1}));
    Tensor rhs(&m, 2);
    Rat third = Rat(1) / m.point_degree();
    for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        if (j < 1 || i > n || j > n) continue;
        rhs.add_term({i, j}, third);
    }
    rep.rhs = rhs;
    rep.holds = (rep.lhs1 == rep.rhs) && (rep.lhs2 == rep.rhs);
    return rep;
}

// ---------------------------------------------------------------------------
// Franchetta rank checks
// ---------------------------------------------------------------------------

struct FranchettaReport {
    int codim = 0, power = 0, n = 0;
    std::vector<std::string> span_names;
    std::size_t span_size = 0;
    std::size_t gram_rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t relation_span_dim = 0;
    bool kernel_equals_relations = false;
    std::vector<std::vector<Rat>> unexplained_kernel; // kernel vectors outside the relation span
    bool ok() const { return kernel_equals_relations; }
};

namespace detail {

struct GdSpan {
    std::vector<CorrClass> classes;
    std::vector<std::string> names;
};

// Spanning monomials of the generically defined subring in one codimension:
// power 1: {h^c}; power 2: {h^a x h^b : a+b = c} plus {Delta . (h^a x h^b) :
// a+b = c-n}. Exponents above n are dropped (h^{n+1} = 0).
inline GdSpan gd_span(const CohModel& m, int codim, int power) {
    GdSpan span;
    const int n = m.n();
    if (power == 1) {
        if (codim <= n) {
            span.classes.push_back(CorrClass::h_box(&m, {codim}));
            span.names.push_back("h^" + std::to_string(codim));
        }
        return span;
    }
    for (int a = 0; a <= std::min(codim, n); ++a) {
        int b = codim - a;
        if (b < 0 || b > n) continue;
        span.classes.push_back(CorrClass::h_box(&m, {a, b}));
        span.names.push_back("h^" + std::to_string(a) + " x h^" + std::to_string(b));
    }
    if (codim >= n) {
        for (int a = 0; a <= codim - n; ++a) {
            int b = codim - n - a;
            CorrClass c(&m, 2);
            c.add_term(CorrTerm{0, {a, b, 0}, 1});
            span.classes.push_back(c);
            span.names.push_back("Delta . (h^" + std::to_string(a) + " x h^" + std::to_string(b) +
                                 ")");
        }
    }
    return span;
}

} // namespace detail

// Gram-matrix injectivity check for the generically defined subring:
// the kernel of the pairing of the codim-c spanning set against the
// complementary-codimension spanning set must be exactly the span of the
// installed relations (instances of the Delta . p_i^*h relation, with
// h-power truncations applied).
inline FranchettaReport franchetta_rank_check(const CohModel& m, int codim, int power) {
    const int n = m.n();
    if (power != 1 && power != 2)
        throw std::invalid_argument("franchetta_rank_check: power must be 1 or 2");
    if (codim < 0 || codim > n * power)
        throw std::out_of_range("franchetta_rank_check: codim outside 0..n*power");

    FranchettaReport rep;
    rep.codim = codim;
    rep.power = power;
    rep.n = n;

    auto span = detail::gd_span(m, codim, power);
    auto dual = detail::gd_span(m, n * power - codim, power);
    rep.span_names = span.names;
    rep.span_size = span.classes.size();

    std::vector<Tensor> a, b;
    for (const auto& c : span.classes) a.push_back(c.realize());
    for (const auto& c : dual.classes) b.push_back(c.realize());

    Mat gram(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) gram.at(i, j) = a[i].mul(b[j]).integral_all();

    // kernel in span coordinates: vectors x with x^T Gram = 0
    auto rk = exact::rank_and_kernel(gram.transposed());
    rep.gram_rank = rk.rank;
    rep.kernel_dim = rk.kernel.size();

    // Relation instances in span coordinates. Span layout for power 2:
    // h-boxes first (enumerated by their first exponent), then the
    // Delta-monomials Delta . (h^a x h^{codim-n-a}) enumerated by a.
    std::vector<std::vector<Rat>> rels;
    if (power == 2 && codim >= n + 1) {
        std::size_t boxes = 0;
        for (int x = 0; x <= std::min(codim, n); ++x) {
            int y = codim - x;
            if (y >= 0 && y <= n) ++boxes;
        }
        auto box_index = [&](int aa, int bb) -> std::optional<std::size_t> {
            if (aa < 0 || aa > n || bb < 0 || bb > n) return std::nullopt;
            std::size_t idx = 0;
            for (int x = 0; x <= std::min(codim, n); ++x) {
                int y = codim - x;
                if (y < 0 || y > n) continue;
                if (x == aa) return idx;
                ++idx;
            }
            return std::nullopt;
        };
        auto delta_index = [&](int aa) -> std::size_t {
            return boxes + static_cast<std::size_t>(aa);
        };

        // Delta . (h^{a+1} x h^b) and Delta . (h^a x h^{b+1}) both equal
        // (1/3) sum_{i+j=n+1} h^{i+a} x h^{j+b}, with overflowing powers
        // truncated to zero.
        for (int aa = 0; aa + n + 1 <= codim; ++aa) {
            int bb = codim - n - 1 - aa;
            for (int side = 0; side < 2; ++side) {
                std::vector<Rat> v(span.classes.size(), Rat(0));
                v[delta_index(side == 0 ? aa + 1 : aa)] = 1;
                for (int i = 1; i <= n; ++i) {
                    int j = n + 1 - i;
                    auto bi = box_index(i + aa, j + bb);
                    if (bi) v[*bi] -= Rat(1) / m.point_degree();
                }
                rels.push_back(std::move(v));
            }
        }
    }
    rep.relation_span_dim = exact::span_rank(rels);
    rep.kernel_equals_relations = exact::same_span(rels, rk.kernel);

    if (!rep.kernel_equals_relations) rep.unexplained_kernel = rk.kernel;
    return rep;
}

} // namespace mck::motive
