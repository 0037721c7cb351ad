#include "mckcert/matrix.hpp"
#include "mckcert/rational.hpp"

#include "lcg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mck::exact;

namespace {

Mat from_rows(const std::vector<std::vector<Rat>>& rows) {
    Mat m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// naive rational Gauss-Jordan, used as an independent oracle for rref
Mat naive_rref(Mat m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat p = m.at(r, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) /= p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return m;
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rat(2, 6) == Rat(1, 3));
    Rat x(-4, 8);
    CHECK(numerator(x) == -1);
    CHECK(denominator(x) == 2);
    CHECK(to_string(Rat(-5, 2)) == "-5/2");
    CHECK(is_integer(Rat(6, 3)));
    CHECK_FALSE(is_integer(Rat(1, 2)));
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(4, 7) == 0);
    CHECK(catalan(4) == 14);
}

TEST_CASE("rank and kernel: identity") {
    auto rk = rank_and_kernel(Mat::identity(2));
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.empty());
}

TEST_CASE("rank and kernel: proportional rows") {
    Mat m = from_rows({{1, 2}, {2, 4}});
    auto rk = rank_and_kernel(m);
    REQUIRE(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(rk.kernel[0] == std::vector<Rat>{-2, 1});
}

TEST_CASE("gram matrix of decomposables plus diagonal on a cubic fourfold square") {
    // basis {h^a x h^b : a+b=4} then Delta; pairings from the model:
    // <h^a x h^b, h^c x h^d> = 9 [a+c=4][b+d=4], <mon, Delta> = 3,
    // <Delta, Delta> = chi = 27.
    Mat g(6, 6);
    for (int a = 0; a <= 4; ++a)
        for (int c = 0; c <= 4; ++c) g.at(a, c) = (a + c == 4) ? 9 : 0;
    for (int a = 0; a <= 4; ++a) { g.at(a, 5) = 3; g.at(5, a) = 3; }
    g.at(5, 5) = 27;
    CHECK(rref(g).rank == 6);
}

TEST_CASE("solve_linear") {
    SECTION("identity") {
        std::vector<Rat> b{Rat(3), Rat(-1, 2)};
        auto s = solve_linear(Mat::identity(2), b);
        REQUIRE(s.consistent);
        CHECK(s.x == b);
        CHECK(s.kernel.empty());
    }
    SECTION("1x1 scaling") {
        Mat a(1, 1);
        a.at(0, 0) = 2;
        auto s = solve_linear(a, {Rat(1)});
        REQUIRE(s.consistent);
        CHECK(s.x == std::vector<Rat>{Rat(1, 2)});
    }
    SECTION("inconsistent") {
        Mat a = from_rows({{1, 1}, {1, 1}});
        auto s = solve_linear(a, {Rat(1), Rat(2)});
        CHECK_FALSE(s.consistent);
    }
    SECTION("underdetermined solution set") {
        Mat a = from_rows({{1, 2}});
        auto s = solve_linear(a, {Rat(5)});
        REQUIRE(s.consistent);
        CHECK(s.x == std::vector<Rat>{5, 0});
        REQUIRE(s.kernel.size() == 1);
        CHECK(s.kernel[0] == std::vector<Rat>{-2, 1});
    }
}

TEST_CASE("property: random matrices") {
    testrand::Lcg rng(20240811);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.rat();

        auto rk = rank_and_kernel(m);

        // rank(M) = rank(M^T)
        CHECK(rk.rank == rref(m.transposed()).rank);

        // M k = 0 exactly for every kernel vector
        for (const auto& k : rk.kernel) {
            for (std::size_t i = 0; i < rows; ++i) {
                Rat dot = 0;
                for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * k[j];
                CHECK(dot == 0);
            }
        }

        // Bareiss-based rref agrees with a naive rational elimination
        CHECK(rref(m).reduced == naive_rref(m));

        // row space is preserved by reduction
        std::vector<std::vector<Rat>> orig_rows, red_rows;
        Mat red = rref(m).reduced;
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<Rat> a(cols), b(cols);
            for (std::size_t j = 0; j < cols; ++j) { a[j] = m.at(i, j); b[j] = red.at(i, j); }
            orig_rows.push_back(a);
            red_rows.push_back(b);
        }
        CHECK(same_span(orig_rows, red_rows));
    }
}
