#include "doctest.h"

#include "ssz/quat.hpp"

using namespace ssz;

TEST_CASE("embedded modular polynomial coefficients") {
    const auto& phi2 = modular_polynomial(2);
    CHECK(phi2[3][0] == 1);
    CHECK(phi2[2][2] == -1);
    CHECK(phi2[2][1] == 1488);
    CHECK(phi2[1][1] == 40773375);
    CHECK(phi2[0][0] == BigInt("-157464000000000"));
    const auto& phi3 = modular_polynomial(3);
    CHECK(phi3[4][0] == 1);
    CHECK(phi3[3][3] == -1);
    CHECK(phi3[1][0] == BigInt("1855425871872000000000"));
    CHECK(phi3[0][0] == 0);
    for (std::size_t a = 0; a < phi3.size(); ++a)
        for (std::size_t b = 0; b < phi3.size(); ++b) CHECK(phi3[a][b] == phi3[b][a]);
    CHECK_THROWS_AS(modular_polynomial(5), unsupported_index);
}

TEST_CASE("Brandt matrices at p=11") {
    SsLocus L(11);
    BrandtMatrix B2 = brandt_prime(L, 2);
    CHECK(B2.entries == std::vector<std::vector<std::int64_t>>{{0, 3}, {2, 1}});
    BrandtMatrix Bp = brandt_p(L);
    CHECK(Bp.entries == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
    BrandtMatrix B3 = brandt_prime(L, 3);
    for (const auto& row : B3.entries) {
        std::int64_t s = 0;
        for (auto x : row) s += x;
        CHECK(s == 4);
    }
    // Eisenstein eigenvalue 4 plus cuspidal eigenvalue a_3 = -1 gives trace 3
    CHECK(B3.entries[0][0] + B3.entries[1][1] == 3);
    CHECK((B2 * B3) == (B3 * B2));
}

TEST_CASE("Hecke recurrences") {
    SsLocus L(11);
    BrandtCache cache(L);
    BrandtMatrix B4 = hecke(4, cache);
    CHECK(B4.entries == std::vector<std::vector<std::int64_t>>{{4, 3}, {2, 5}});
    CHECK(hecke(1, cache).entries == std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});
    CHECK((hecke(6, cache)) == (cache.b2 * cache.b3));
    CHECK((hecke(12, cache)) == (hecke(4, cache) * cache.b3));
    CHECK((hecke(11, cache)) == cache.bp);
    CHECK_THROWS_AS(hecke(5, cache), unsupported_index);
    CHECK_THROWS_AS(hecke(35, cache), unsupported_index);
    CHECK_THROWS_AS(hecke(0, cache), invalid_input);
}

TEST_CASE("pairing") {
    SsLocus L(11);
    std::vector<BigInt> v{BigInt(1), BigInt(-1)};
    CHECK(pairing(L, v, v) == 5);  // 3*1 + 2*1
    std::vector<BigRat> u{BigRat(1, 3), BigRat(1, 2)};
    CHECK(pairing(L, u, u) == BigRat(5, 6));
    CHECK_THROWS_AS(pairing(L, std::vector<BigInt>{BigInt(1)}, v), invalid_input);
}

TEST_CASE("eigenform of the conductor 11 curve") {
    SsLocus L(11);
    BrandtCache cache(L);
    CurveQ E("11a1", 0, -1, 1, -10, -20, 11, 0);
    Eigenform f = extract_eigenform(cache, E);
    CHECK(f.v == std::vector<BigInt>{BigInt(1), BigInt(-1)});
    CHECK(f.eigenvalues.at(2) == -2);
    CHECK(f.eigenvalues.at(3) == -1);
    CHECK(f.eigenvalues.at(11) == 1);
    CHECK(f.eigenvalues.at(12) == -2);  // a_12 = a_4 a_3
    CHECK(pairing(L, f.v, f.v) == 5);  // = t * D_E with t = 5, D_E = 1
    // wrong conductor is rejected before any linear algebra
    CurveQ E37("37a1", 0, 0, 1, -1, 0, 37, 1);
    CHECK_THROWS_AS(extract_eigenform(cache, E37), invalid_input);
}

TEST_CASE("eigenform at p=83 vanishes on the rational classes") {
    SsLocus L(83);
    BrandtCache cache(L);
    CurveQ E("e83", 1, 1, 1, 1, 0, 83, 1);
    Eigenform f = extract_eigenform(cache, E);
    REQUIRE(f.v.size() == 8);
    // a_p = -1 forces v(e_j) = -v(e_conj(j)), so v = 0 on S_p
    for (std::size_t i : L.s_p()) CHECK(f.v[i] == 0);
    CHECK(f.v[6] == -f.v[7]);
    CHECK(f.v[6] != 0);
    ParityReport rep = parity_checks(L, cache.b2, &f, ap(E, 83));
    CHECK(rep.eigen_conj_pass);
    CHECK(rep.conjugation_pass);
}

TEST_CASE("b_D divisors") {
    SsLocus L(11);
    DivisorVector b3 = b_divisor(L, 3);
    CHECK(b3.coeffs == std::vector<BigRat>{BigRat(2, 3), BigRat(0)});
    DivisorVector b4 = b_divisor(L, 4);
    CHECK(b4.coeffs == std::vector<BigRat>{BigRat(0), BigRat(1)});
    CHECK_THROWS_AS(b_divisor(L, 7), invalid_input);   // 11 splits
    CHECK_THROWS_AS(b_divisor(L, 15), invalid_input);  // class number 2
}

TEST_CASE("parity of Brandt entries on S_p when ell is inert") {
    // (-37/3) = (-1/3) = -1: evenness applies at p=37, ell=3
    SsLocus L37(37);
    ParityReport rep = parity_checks(L37, brandt_prime(L37, 3));
    CHECK(rep.evenness_applicable);
    CHECK(rep.evenness_pass);
    CHECK(rep.failures.empty());
    // (-11/3) = (1/3) = 1: not applicable
    SsLocus L11(11);
    CHECK(!parity_checks(L11, brandt_prime(L11, 3)).evenness_applicable);
    // ell = 2 never qualifies
    CHECK(!parity_checks(L11, brandt_prime(L11, 2)).evenness_applicable);
}

TEST_CASE("Brandt invariants across a range of p") {
    for (std::uint64_t p = 11; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        SsLocus L(p);
        // brandt_prime throws on any violated invariant
        BrandtMatrix B2 = brandt_prime(L, 2);
        BrandtMatrix B3 = brandt_prime(L, 3);
        CHECK((B2 * B3) == (B3 * B2));
        ParityReport r2 = parity_checks(L, B2);
        ParityReport r3 = parity_checks(L, B3);
        CHECK(r2.conjugation_pass);
        CHECK(r3.evenness_pass);
    }
}
