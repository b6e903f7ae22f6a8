#include "doctest.h"

#include "ssz/ssloc.hpp"

using namespace ssz;

TEST_CASE("class numbers of small discriminants") {
    CHECK(class_number(3) == 1);
    CHECK(class_number(4) == 1);
    CHECK(class_number(7) == 1);
    CHECK(class_number(8) == 1);
    CHECK(class_number(11) == 1);
    CHECK(class_number(23) == 3);
    CHECK(class_number(44) == 3);
    CHECK(class_number(47) == 5);
    CHECK(class_number(52) == 2);
    CHECK(class_number(83) == 3);
    CHECK(class_number(148) == 2);
    CHECK(class_number(163) == 1);
    CHECK_THROWS_AS(class_number(5), invalid_input);  // -5 is 3 mod 4
    CHECK_THROWS_AS(class_number(6), invalid_input);
}

TEST_CASE("s_p class number formula") {
    CHECK(s_p_formula(11) == 2);
    CHECK(s_p_formula(13) == 1);   // h(-52)/2
    CHECK(s_p_formula(37) == 1);   // h(-148)/2
    CHECK(s_p_formula(83) == 6);   // 2 h(-83)
    CHECK_THROWS_AS(s_p_formula(12), invalid_input);
}

TEST_CASE("locus p=11") {
    SsLocus L(11);
    REQUIRE(L.n() == 2);
    CHECK(L.cls(0).j == Fp2::from_base(Fp(0, 11)));
    CHECK(L.cls(0).weight == 3);  // j = 0, 11 = 2 mod 3
    CHECK(L.cls(1).j == Fp2::from_base(Fp(1, 11)));  // 1728 mod 11
    CHECK(L.cls(1).weight == 2);  // j = 1728, 11 = 3 mod 4
    CHECK(L.s_p_count() == 2);
    CHECK(L.mass() == BigRat(5, 6));
}

TEST_CASE("locus p=13: one class, trivial weight") {
    SsLocus L(13);
    REQUIRE(L.n() == 1);
    CHECK(L.cls(0).j == Fp2::from_base(Fp(5, 13)));
    CHECK(L.cls(0).weight == 1);
    CHECK(L.cls(0).conj == 0);
    CHECK(L.mass() == BigRat(1));
}

TEST_CASE("locus p=83") {
    SsLocus L(83);
    REQUIRE(L.n() == 8);
    CHECK(L.s_p_count() == 6);
    std::vector<std::uint64_t> rational;
    for (std::size_t i : L.s_p()) rational.push_back(L.cls(i).j.a().value());
    CHECK(rational == std::vector<std::uint64_t>{0, 17, 28, 50, 67, 68});
    // the two remaining classes form a Frobenius pair
    CHECK(L.cls(6).conj == 7);
    CHECK(L.cls(7).conj == 6);
    CHECK(L.cls(7).j == L.cls(6).j.frobenius());
    // weights: w=3 at j=0 (83 = 2 mod 3), w=2 at j=1728=68 (83 = 3 mod 4)
    CHECK(L.cls(0).weight == 3);
    for (std::size_t i : L.s_p())
        if (L.cls(i).j.a().value() == 68) CHECK(L.cls(i).weight == 2);
    CHECK(L.mass() == BigRat(41, 6));
}

TEST_CASE("locus size matches the class number formula") {
    for (std::uint64_t p = 11; p <= 400; ++p) {
        if (!is_prime(p)) continue;
        SsLocus L(p);  // ctor verifies mass and the involution
        CHECK(L.s_p_count() == static_cast<std::size_t>(s_p_formula(p)));
    }
}

TEST_CASE("cm seed classes") {
    SsLocus L11(11);
    // squares mod 11 are {1,3,4,5,9}: -3 = 8 and -4 = 7 are inert
    auto c3 = cm_seed_class(L11, 3);
    REQUIRE(c3.has_value());
    CHECK(*c3 == 0);  // j = 0
    auto c4 = cm_seed_class(L11, 4);
    REQUIRE(c4.has_value());
    CHECK(*c4 == 1);  // j = 1728 = 1
    CHECK(!cm_seed_class(L11, 7).has_value());   // -7 = 4 is a square
    CHECK(!cm_seed_class(L11, 11).has_value());  // (-11/11) = 0
    CHECK_THROWS_AS(cm_seed_class(L11, 23), invalid_input);

    // every inert seed must land on a supersingular class, for many p
    for (std::uint64_t p : {std::uint64_t{83}, std::uint64_t{101}, std::uint64_t{167}}) {
        SsLocus L(p);
        for (const CMSeed& s : cm_seed_table()) {
            auto idx = cm_seed_class(L, s.D);
            if (idx) CHECK(L.cls(*idx).j == Fp2::from_base(Fp::from_int(s.j, p)));
        }
    }
}
