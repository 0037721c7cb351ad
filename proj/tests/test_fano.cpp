#include "mckcert/fano_ring.hpp"

#include "pieri_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mck::fano;
using mck::exact::Int;
using mck::exact::Rat;

TEST_CASE("fano context") {
    FanoContext ctx(4);
    CHECK(ctx.m() == 6);
    CHECK(ctx.dim_f() == 4);
    // [F] = 18 g^2 c + 9 c^2 expanded in the Schubert basis of Gr(2,6)
    CHECK(ctx.fano_class.coeff({2, 2}) == 27);
    CHECK(ctx.fano_class.coeff({3, 1}) == 18);
}

TEST_CASE("degree_F") {
    FanoContext c4(4);
    CHECK(degree_F(4, 0, c4) == 108);
    CHECK(degree_F(0, 2, c4) == Rat(oracle::odegree_F(0, 2, 4)));
    CHECK(degree_F(2, 1, c4) == Rat(oracle::odegree_F(2, 1, 4)));
    CHECK(degree_F(3, 0, c4) == 0); // wrong weighted degree
    CHECK(degree_F(0, 0, c4) == 0);
}

TEST_CASE("r_formula") {
    CHECK(r_formula(0, 5) == 1);
    CHECK(r_formula(2, 4) == 2);
    CHECK(r_formula(3, 4) == 1);
    CHECK_THROWS_AS(r_formula(5, 4), std::out_of_range);
    CHECK_THROWS_AS(r_formula(-1, 4), std::out_of_range);
}

TEST_CASE("hilbert function of the apolar tautological ring") {
    CHECK(taut_hilbert_function(FanoContext(4)) == std::vector<int>{1, 1, 2, 1, 1});
    CHECK(taut_hilbert_function(FanoContext(3)) == std::vector<int>{1, 1, 1});
    CHECK(taut_hilbert_function(FanoContext(5)) == std::vector<int>{1, 1, 2, 2, 2, 1, 1});
}

TEST_CASE("hilbert function equals the closed formula, 3 <= n <= 10") {
    for (int n = 3; n <= 10; ++n) {
        FanoContext ctx(n);
        auto h = taut_hilbert_function(ctx);
        REQUIRE(h.size() == static_cast<std::size_t>(2 * n - 3));
        for (int i = 0; i <= 2 * n - 4; ++i) CHECK(h[i] == r_formula(i, n));
        // Gorenstein symmetry and normalized ends
        CHECK(h.front() == 1);
        CHECK(h.back() == 1);
        for (int i = 0; i <= 2 * n - 4; ++i) CHECK(h[i] == h[2 * n - 4 - i]);
    }
}

TEST_CASE("perfect pairing: reduced pairing matrices are square of full rank") {
    for (int n : {3, 4, 5, 6, 7}) {
        FanoContext ctx(n);
        for (int i = 0; i <= 2 * n - 4; ++i) {
            auto rank = mck::exact::rref(pairing_matrix(i, ctx)).rank;
            CHECK(rank == static_cast<std::size_t>(r_formula(i, n)));
            CHECK(rank == static_cast<std::size_t>(r_formula(2 * n - 4 - i, n)));
        }
    }
}

TEST_CASE("socle relation") {
    SECTION("n = 5 structure") {
        auto rel = solve_socle_relation(5);
        CHECK(rel.P.coeff(4, 0) == 1); // normalized nonzero g^{n-1} coefficient
        CHECK(rel.P.homogeneous_degree() == 4);
        // P [F] = 0 in the Schubert model
        auto prod = mck::schubert::multiply(rel.P.evaluate(7), FanoContext(5).fano_class);
        CHECK(prod.is_zero());
    }
    SECTION("P [F] = 0 and uniqueness for 5 <= n <= 12") {
        for (int n = 5; n <= 12; ++n) {
            auto rel = solve_socle_relation(n);
            CHECK(rel.P.coeff(n - 1, 0) == 1);
            auto prod = mck::schubert::multiply(rel.P.evaluate(n + 2), FanoContext(n).fano_class);
            CHECK(prod.is_zero());
        }
    }
    SECTION("domain") {
        CHECK_THROWS_AS(solve_socle_relation(4), std::invalid_argument);
    }
}

TEST_CASE("recurrence check") {
    auto r5 = recurrence_check(5);
    CHECK(r5.p[0] == 2);
    CHECK(r5.p[1] == Rat(-5, 2));
    CHECK(r5.ok);

    auto r6 = recurrence_check(6);
    CHECK(r6.p[0] == Rat(5, 2));
    CHECK(r6.ok);

    auto r9 = recurrence_check(9);
    CHECK(r9.p[1] == Rat(-25, 2));
    CHECK(r9.ok);

    for (int n = 5; n <= 12; ++n) {
        auto r = recurrence_check(n);
        CHECK(r.a_all_integers);
        CHECK(r.p1_matches_closed_form);
        CHECK(r.p2_matches_closed_form);
        CHECK(r.p_noninteger_from_2);
        CHECK(r.contradiction_holds);
    }
}

TEST_CASE("dimension bound for R*(F x F)") {
    CHECK(dimRFxF_bound(0, 5) == 1);
    CHECK(dimRFxF_bound(2, 4) == 6);
    // k = 2n-4 case: convolution 8 plus (n-1) + 1
    CHECK(dimRFxF_bound(4, 4) == 12);
    CHECK_THROWS_AS(dimRFxF_bound(-1, 4), std::out_of_range);
    CHECK_THROWS_AS(dimRFxF_bound(9, 4), std::out_of_range);

    for (int n = 3; n <= 8; ++n)
        for (int k = 0; k <= 4 * n - 8; ++k)
            CHECK(dimRFxF_bound(k, n) == dimRFxF_bound(4 * n - 8 - k, n));
}
