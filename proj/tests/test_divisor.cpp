#include "doctest.h"

#include "ssz/divisor.hpp"

using namespace ssz;

namespace {

struct Setup {
    CurveQ E;
    SsLocus locus;
    BrandtCache cache;
    Eigenform f;
    Setup(CurveQ curve)
        : E(std::move(curve)), locus(E.conductor()), cache(locus), f(extract_eigenform(cache, E)) {}
};

}  // namespace

TEST_CASE("analysis of the conductor 11 curve: divisor polynomial is trivial") {
    Setup s(CurveQ("11a1", 0, -1, 1, -10, -20, 11, 0));
    CurveAnalysis a = analyze(s.E, s.locus, s.f);
    CHECK(a.eps == 1);
    CHECK(a.divisor_poly.poly.degree() == 0);  // f = Delta mod 11, F(Delta) = 1
    CHECK(a.ss_zero_indices.empty());
    CHECK(a.v_zero_indices.empty());
    CHECK(a.n_p == 0);
    CHECK(a.conjugate_zero_count == 0);
    CHECK(a.s_p == 2);
    CHECK(a.ratio == BigRat(0));
    CHECK(!a.all_even_on_sp);  // v = (1, -1)

    // eps = +1 but rank 0: the evenness conjecture does not apply
    ConjectureResult c = conjecture1_check(a, s.f, s.locus, s.E.rank());
    CHECK(c.verdict == ConjectureVerdict::not_applicable);
    // disc < 0: the evenness theorem does not apply either
    CHECK(theorem_even_check(s.E, s.f, s.locus) == CheckVerdict::not_applicable);
}

TEST_CASE("analysis at p=83 matches the closed form") {
    Setup s(CurveQ("e83", 1, 1, 1, 1, 0, 83, 1));
    CurveAnalysis a = analyze(s.E, s.locus, s.f);
    CHECK(a.eps == -1);
    const std::uint64_t p = 83;
    // x(x+15)(x+16)(x+33)(x+55)(x+66)
    PolyFp expect({Fp(1, p)}, p);
    for (std::uint64_t r : {std::uint64_t{0}, std::uint64_t{68}, std::uint64_t{67},
                            std::uint64_t{50}, std::uint64_t{28}, std::uint64_t{17}})
        expect = expect * PolyFp::x_minus(Fp(r, p));
    CHECK(a.divisor_poly.poly == expect);
    std::vector<Fp> mv = a.divisor_poly.monomial_view();
    std::vector<std::uint64_t> mvv;
    for (const Fp& c : mv) mvv.push_back(c.value());
    // Delta E4^18, ..., Delta^6 E4^3, Delta^7 (the last coefficient vanishes)
    CHECK(mvv == std::vector<std::uint64_t>{1, 19, 21, 58, 21, 60, 0});
    CHECK(a.ss_zero_indices == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(a.n_p == 6);
    CHECK(a.conjugate_zero_count == 0);
    CHECK(a.s_p == 6);
    CHECK(a.ratio == BigRat(1));
    CHECK(a.all_even_on_sp);  // v vanishes on S_p
}

TEST_CASE("rank one, positive discriminant curve at p=37") {
    Setup s(CurveQ("37a1", 0, 0, 1, -1, 0, 37, 1));
    CurveAnalysis a = analyze(s.E, s.locus, s.f);
    CHECK(a.eps == -1);
    CHECK(a.s_p == 1);
    CHECK(a.n_p >= 1);  // eps = -1 forces S_p inside the zero set
    // disc = 37 > 0 and no rational 2-torsion: v must be even on S_p
    CHECK(theorem_even_check(s.E, s.f, s.locus) == CheckVerdict::pass);
    CHECK(a.all_even_on_sp);
    ConjectureResult c = conjecture1_check(a, s.f, s.locus, s.E.rank());
    CHECK(c.verdict == ConjectureVerdict::not_applicable);  // eps = -1
}

TEST_CASE("rank two curve at p=389: conjecture and vanishing pairings") {
    Setup s(CurveQ("389a1", 0, 1, 1, -2, 0, 389, 2));
    CurveAnalysis a = analyze(s.E, s.locus, s.f);
    CHECK(a.eps == 1);
    ConjectureResult c = conjecture1_check(a, s.f, s.locus, s.E.rank());
    CHECK(c.verdict == ConjectureVerdict::confirmed_even);
    CHECK(a.all_even_on_sp);
    auto gw = gross_waldspurger_check(s.E, s.f, s.locus);
    CHECK(!gw.empty());
    for (const auto& e : gw) {
        CHECK(e.asserted_zero);  // eps = +1 and rank 2
        CHECK(e.pass);
        CHECK(e.m_D == 0);
    }
}

TEST_CASE("gross-waldspurger pairings at p=11") {
    Setup s(CurveQ("11a1", 0, -1, 1, -10, -20, 11, 0));
    auto gw = gross_waldspurger_check(s.E, s.f, s.locus);
    bool saw3 = false, saw4 = false;
    for (const auto& e : gw) {
        CHECK(!e.asserted_zero);  // rank 0: no vanishing claim
        CHECK(e.pass);
        if (e.D == 3) { saw3 = true; CHECK(e.m_D == 2); }
        if (e.D == 4) { saw4 = true; CHECK(e.m_D == -2); }
        CHECK(e.D != 7);  // -7 is a square mod 11
    }
    CHECK(saw3);
    CHECK(saw4);
}
