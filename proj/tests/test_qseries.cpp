#include "doctest.h"

#include "ssz/qseries.hpp"

using namespace ssz;

TEST_CASE("eisenstein series coefficients") {
    QSeries e4 = eisenstein(4, 83, 3);
    CHECK(e4.coeff(0) == Fp(1, 83));
    CHECK(e4.coeff(1) == Fp(74, 83));  // 240 mod 83
    CHECK(e4.coeff(2) == Fp(2, 83));   // 240*9 mod 83
    QSeries e6 = eisenstein(6, 7, 2);
    CHECK(e6.coeff(0) == Fp(1, 7));
    CHECK(e6.coeff(1) == Fp(0, 7));  // 504 = 7*72
    CHECK(eisenstein(4, 101, 1).coeff(0) == Fp(1, 101));
    CHECK_THROWS_AS(eisenstein(8, 7, 3), invalid_input);
}

TEST_CASE("delta normalization and first coefficients") {
    QSeries d = delta(97, 12);
    CHECK(d.lowest() == 1);
    CHECK(d.coeff(1) == Fp(1, 97));
    CHECK(d.coeff(2) == Fp::from_int(std::int64_t{-24}, 97));
    // tau(3) = 252, tau(4) = -1472, tau(5) = 4830
    CHECK(d.coeff(3) == Fp::from_int(std::int64_t{252}, 97));
    CHECK(d.coeff(4) == Fp::from_int(std::int64_t{-1472}, 97));
    CHECK(d.coeff(5) == Fp::from_int(std::int64_t{4830}, 97));
}

TEST_CASE("classical identity E4^3 - E6^2 = 1728 Delta") {
    for (std::uint64_t p : {11ull, 83ull, 389ull}) {
        const std::size_t N = 20;
        QSeries e4 = eisenstein(4, p, N);
        QSeries e6 = eisenstein(6, p, N);
        QSeries lhs = e4 * e4 * e4 - e6 * e6;
        QSeries d = delta(p, N);
        Fp c1728 = Fp::from_int(std::int64_t{1728}, p);
        for (std::int64_t e = 0; e < lhs.abs_precision(); ++e)
            CHECK(lhs.coeff(e) == c1728 * d.coeff(e));
    }
}

TEST_CASE("j series") {
    QSeries j = j_series(83, 10);
    CHECK(j.lowest() == -1);
    CHECK(j.coeff(-1) == Fp(1, 83));
    CHECK(j.coeff(0) == Fp::from_int(std::int64_t{744}, 83));
    // j * Delta = E4^3 to tracked precision
    QSeries d = delta(83, 12);
    QSeries e4 = eisenstein(4, 83, 12);
    QSeries lhs = j * d;
    QSeries rhs = e4 * e4 * e4;
    for (std::int64_t e = 0; e < std::min(lhs.abs_precision(), rhs.abs_precision()); ++e)
        CHECK(lhs.coeff(e) == rhs.coeff(e));
}

TEST_CASE("case tables for tilde E, m, h") {
    // k = 84: Etilde = 1, m = 7, h = 1
    CHECK(m_of(84) == 7);
    CHECK(h_poly(84, 83).degree() == 0);
    QSeries t84 = tilde_e(84, 83, 5);
    CHECK(t84.coeff(0) == Fp(1, 83));
    CHECK(t84.coeff(1) == Fp(0, 83));
    // k = 14: Etilde = E4^2 E6, m = 0, h = x^2(x-1728)
    CHECK(m_of(14) == 0);
    PolyFp h14 = h_poly(14, 97);
    CHECK(h14.degree() == 3);
    CHECK(h14.coeff(2) == Fp::from_int(std::int64_t{-1728}, 97));
    CHECK(h14.coeff(1) == Fp(0, 97));
    QSeries t14 = tilde_e(14, 97, 6);
    QSeries e4 = eisenstein(4, 97, 6), e6 = eisenstein(6, 97, 6);
    QSeries expect = e4 * e4 * e6;
    for (std::int64_t e = 0; e < t14.abs_precision(); ++e)
        CHECK(t14.coeff(e) == expect.coeff(e));
    // k = 12
    CHECK(m_of(12) == 1);
    CHECK(h_poly(12, 97).degree() == 0);
    CHECK_THROWS_AS(m_of(13), invalid_input);
}

TEST_CASE("divisor polynomial of Delta at level 11 is 1") {
    // Delta mod 11 equals the level-11 newform mod 11; F tilde = 1, h = 1
    QSeries d = delta(11, 12);
    DivisorPoly dp = divisor_polynomial(d, 11);
    CHECK(dp.poly.degree() == 0);
    CHECK(dp.poly.coeff(0) == Fp(1, 11));
    CHECK(dp.m == 1);
}

TEST_CASE("wrong weight tag is rejected as inconsistent") {
    QSeries d = delta(11, 30);
    d.set_weight(24);  // lie about the weight
    CHECK_THROWS_AS(divisor_polynomial(d, 11), not_a_modular_form);
}

TEST_CASE("supersingular polynomial at small primes") {
    SUBCASE("p = 11: x(x-1)") {
        PolyFp ss = supersingular_poly(11);
        CHECK(ss.degree() == 2);
        CHECK(ss.eval(Fp(0, 11)).is_zero());
        CHECK(ss.eval(Fp(1, 11)).is_zero());  // 1728 = 1 mod 11
    }
    SUBCASE("p = 13: degree 1, root j = 5") {
        PolyFp ss = supersingular_poly(13);
        CHECK(ss.degree() == 1);
        CHECK(ss.eval(Fp(5, 13)).is_zero());
    }
    SUBCASE("p = 83: degree 8, F_83-roots {0,17,28,50,67,68}") {
        PolyFp ss = supersingular_poly(83);
        CHECK(ss.degree() == 8);
        for (std::uint64_t j : {0ull, 17ull, 28ull, 50ull, 67ull, 68ull})
            CHECK(ss.eval(Fp(j, 83)).is_zero());
        auto roots = roots_in_fp2(ss);
        CHECK(roots.size() == 8);
        int rational = 0;
        for (auto& [r, m] : roots) {
            CHECK(m == 1);
            if (r.in_base_field()) ++rational;
        }
        CHECK(rational == 6);
    }
}

TEST_CASE("supersingular polynomial squarefree and within degree bound") {
    for (std::uint64_t p = 5; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        PolyFp ss = supersingular_poly(p);
        int k = static_cast<int>(p) - 1;
        CHECK(ss.degree() <= m_of(k) + h_poly(k, p).degree());
        PolyFp g = gcd(ss, ss.derivative());
        CHECK(g.degree() == 0);
    }
}
