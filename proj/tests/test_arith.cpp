#include "doctest.h"

#include <map>
#include <random>

#include "ssz/arith.hpp"

using namespace ssz;

TEST_CASE("legendre symbol basics") {
    CHECK(legendre(1, 7) == 1);
    CHECK(legendre(3, 7) == -1);  // squares mod 7 are {1,2,4}
    CHECK(legendre(-3, 11) == -1);
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(14, 7) == 0);
    CHECK_THROWS_AS(legendre(3, 8), invalid_input);
    CHECK_THROWS_AS(legendre(3, 2), invalid_input);
}

TEST_CASE("legendre multiplicativity") {
    const std::uint64_t p = 43;
    for (int a = 1; a < 43; ++a)
        for (int b = 1; b < 43; ++b)
            CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
}

TEST_CASE("sqrt_mod_p picks the smaller root") {
    CHECK(*sqrt_mod_p(Fp(0, 11)) == Fp(0, 11));
    CHECK(*sqrt_mod_p(Fp(4, 11)) == Fp(2, 11));
    CHECK(!sqrt_mod_p(Fp(8, 11)).has_value());
    // consistency with legendre on a p = 1 mod 4 prime (Tonelli-Shanks path)
    for (std::uint64_t a = 0; a < 73; ++a) {
        auto r = sqrt_mod_p(Fp(a, 73));
        if (legendre(static_cast<std::int64_t>(a), 73) == -1) {
            CHECK(!r.has_value());
        } else {
            REQUIRE(r.has_value());
            CHECK(*r * *r == Fp(a, 73));
            CHECK(r->value() <= 73 - r->value());
        }
    }
}

TEST_CASE("Fp2 frobenius is an involution fixing F_p") {
    std::mt19937_64 rng(7);
    const std::uint64_t p = 101;
    for (int i = 0; i < 1000; ++i) {
        Fp2 x(Fp(rng() % p, p), Fp(rng() % p, p));
        CHECK(x.frobenius().frobenius() == x);
        CHECK(x.pow(p * p) == x);  // Frobenius order divides 2
        if (x.in_base_field()) CHECK(x.frobenius() == x);
    }
    // frobenius = p-th power map
    Fp2 s(Fp(3, p), Fp(5, p));
    CHECK(s.pow(p) == s.frobenius());
}

TEST_CASE("roots_in_fp2 on simple polynomials") {
    const std::uint64_t p = 5;
    PolyFp f({Fp::from_int(std::int64_t{-1}, p), Fp(0, p), Fp(1, p)}, p);  // x^2 - 1
    auto r = roots_in_fp2(f);
    REQUIRE(r.size() == 2);
    CHECK(r[0].first == Fp2::from_base(Fp(1, p)));
    CHECK(r[0].second == 1);
    CHECK(r[1].first == Fp2::from_base(Fp(4, p)));
    CHECK(r[1].second == 1);
}

TEST_CASE("roots_in_fp2 with multiplicity") {
    const std::uint64_t p = 11;
    PolyFp lin = PolyFp::x_minus(Fp(1, p));
    PolyFp f = lin * lin * lin;
    auto r = roots_in_fp2(f);
    REQUIRE(r.size() == 1);
    CHECK(r[0].first == Fp2::from_base(Fp(1, p)));
    CHECK(r[0].second == 3);
}

TEST_CASE("roots_in_fp2 finds conjugate roots outside F_p") {
    const std::uint64_t p = 11;
    // x^2 - 8, 8 a nonresidue mod 11
    PolyFp f({Fp::from_int(std::int64_t{-8}, p), Fp(0, p), Fp(1, p)}, p);
    auto r = roots_in_fp2(f);
    REQUIRE(r.size() == 2);
    for (const auto& [root, mult] : r) {
        CHECK(!root.in_base_field());
        CHECK(mult == 1);
        CHECK(root * root == Fp2::from_base(Fp(8, p)));
    }
    CHECK(r[0].first == r[1].first.frobenius());
    CHECK_THROWS_AS(roots_in_fp2(PolyFp(p)), invalid_input);
}

TEST_CASE("roots_in_fp2 is multiplicative on products") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11, 13, 101}[trial % 5];
        auto rand_poly = [&](int deg) {
            std::vector<Fp> c;
            for (int i = 0; i <= deg; ++i) c.emplace_back(rng() % p, p);
            c.push_back(Fp(1, p));
            return PolyFp(std::move(c), p);
        };
        PolyFp f = rand_poly(static_cast<int>(rng() % 7));
        PolyFp g = rand_poly(static_cast<int>(rng() % 7));
        auto rf = roots_in_fp2(f), rg = roots_in_fp2(g), rfg = roots_in_fp2(f * g);
        std::map<std::pair<std::uint64_t, std::uint64_t>, int> expect, got;
        auto key = [](const Fp2& x) {
            return std::make_pair(x.a().value(), x.b().value());
        };
        for (auto& [r, m] : rf) expect[key(r)] += m;
        for (auto& [r, m] : rg) expect[key(r)] += m;
        for (auto& [r, m] : rfg) got[key(r)] += m;
        CHECK(expect == got);
    }
}

TEST_CASE("primitive_integer_kernel") {
    using Row = std::vector<BigRat>;
    SUBCASE("one relation") {
        auto k = primitive_integer_kernel({Row{BigRat(1), BigRat(1)}});
        REQUIRE(k.size() == 1);
        CHECK(k[0][0] == 1);
        CHECK(k[0][1] == -1);
    }
    SUBCASE("trivial kernel") {
        auto k = primitive_integer_kernel({Row{BigRat(1), BigRat(0)}, Row{BigRat(0), BigRat(1)}});
        CHECK(k.empty());
    }
    SUBCASE("rank one 2x2") {
        auto k = primitive_integer_kernel({Row{BigRat(2), BigRat(2)}, Row{BigRat(3), BigRat(3)}});
        REQUIRE(k.size() == 1);
        CHECK(k[0][0] == 1);
        CHECK(k[0][1] == -1);
    }
    SUBCASE("rational entries, exact kernel, gcd one") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Row> M(3, Row(5));
            for (auto& row : M)
                for (auto& x : row) {
                    x = BigRat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 7) + 1);
                    x.canonicalize();
                }
            auto K = primitive_integer_kernel(M);
            CHECK(K.size() >= 2);  // 5 columns, at most rank 3
            for (const auto& v : K) {
                BigInt g = 0;
                for (const auto& row : M) {
                    BigRat s(0);
                    for (std::size_t j = 0; j < 5; ++j) s += row[j] * BigRat(v[j]);
                    s.canonicalize();
                    CHECK(s == 0);
                }
                for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                CHECK(g == 1);
            }
        }
    }
}
