#pragma once

// Dense exact linear algebra over the rationals: reduced row echelon form,
// rank, kernel bases and linear solving. Forward elimination is Bareiss-style
// fraction-free over the integers so intermediate entries stay minors of the
// input instead of blowing up as unreduced fractions.

#include "mckcert/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mck::exact {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> entries_;
};

inline Mat mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

struct Rref {
    Mat reduced;                      // reduced row echelon form over Q
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    std::size_t rank = 0;
};

// Deterministic pivoting: columns left to right, first row with a nonzero
// entry. Output is therefore reproducible across runs and platforms.
inline Rref rref(const Mat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();

    // Clear denominators row by row; row scaling changes neither row space
    // nor kernel.
    std::vector<std::vector<Int>> w(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = lcm(l, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < cols; ++j) {
            Rat scaled = m.at(i, j) * Rat(l);
            w[i][j] = numerator(scaled);
        }
    }

    // Bareiss forward pass: every division below is exact.
    std::vector<std::size_t> pivots;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && w[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(w[piv], w[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int t = w[r][col] * w[i][j] - w[i][col] * w[r][j];
                w[i][j] = t / prev;
            }
            w[i][col] = 0;
        }
        prev = w[r][col];
        pivots.push_back(col);
        ++r;
    }

    // Rational finish: normalize pivot rows and eliminate upwards.
    Mat red(rows, cols);
    for (std::size_t i = 0; i < r; ++i) {
        Rat p(w[i][pivots[i]]);
        for (std::size_t j = 0; j < cols; ++j) red.at(i, j) = Rat(w[i][j]) / p;
    }
    for (std::size_t i = r; i-- > 0;) {
        for (std::size_t k = 0; k < i; ++k) {
            Rat f = red.at(k, pivots[i]);
            if (f == 0) continue;
            for (std::size_t j = pivots[i]; j < cols; ++j)
                red.at(k, j) -= f * red.at(i, j);
        }
    }
    return Rref{std::move(red), std::move(pivots), r};
}

struct RankKernel {
    std::size_t rank = 0;
    // Kernel basis vectors (columns of the input's null space), in the
    // reduced echelon form induced by the free columns: deterministic.
    std::vector<std::vector<Rat>> kernel;
};

inline RankKernel rank_and_kernel(const Mat& m) {
    Rref e = rref(m);
    RankKernel out;
    out.rank = e.rank;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.rank; ++i)
            v[e.pivots[i]] = -e.reduced.at(i, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

struct Solution {
    bool consistent = false;
    std::vector<Rat> x;                     // one solution (free vars = 0)
    std::vector<std::vector<Rat>> kernel;   // solution set = x + span(kernel)
};

inline Solution solve_linear(const Mat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref e = rref(aug);
    Solution s;
    for (std::size_t c : e.pivots)
        if (c == a.cols()) return s; // pivot in the rhs column: inconsistent
    s.consistent = true;
    s.x.assign(a.cols(), Rat(0));
    for (std::size_t i = 0; i < e.rank; ++i)
        s.x[e.pivots[i]] = e.reduced.at(i, a.cols());
    s.kernel = rank_and_kernel(a).kernel;
    return s;
}

// Rank of the span of a set of coordinate vectors.
inline std::size_t span_rank(const std::vector<std::vector<Rat>>& vecs) {
    if (vecs.empty()) return 0;
    Mat m(vecs.size(), vecs.front().size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs[i].size(); ++j) m.at(i, j) = vecs[i][j];
    return rref(m).rank;
}

// True iff the two lists of vectors span the same subspace (compared via
// canonical reduced row echelon bases).
inline bool same_span(const std::vector<std::vector<Rat>>& u,
                      const std::vector<std::vector<Rat>>& v) {
    if (u.empty() && v.empty()) return true;
    std::size_t cols = u.empty() ? v.front().size() : u.front().size();
    auto canonical = [cols](const std::vector<std::vector<Rat>>& vs) {
        Mat m(vs.size(), cols);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = vs[i][j];
        Rref e = rref(m);
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < e.rank; ++i) {
            std::vector<Rat> r(cols);
            for (std::size_t j = 0; j < cols; ++j) r[j] = e.reduced.at(i, j);
            rows.push_back(std::move(r));
        }
        return rows;
    };
    return canonical(u) == canonical(v);
}

} // namespace mck::exact
