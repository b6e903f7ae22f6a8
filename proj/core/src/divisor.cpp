#include "ssz/divisor.hpp"

#include <algorithm>

namespace ssz {

CurveAnalysis analyze(const CurveQ& E, const SsLocus& locus, const Eigenform& eigenform) {
    const std::uint64_t p = locus.p();
    if (E.conductor() != p) throw invalid_input("analyze: conductor of E != locus.p");
    const int k = static_cast<int>(p) + 1;
    const std::size_t prec =
        static_cast<std::size_t>(m_of(k) + h_poly(k, p).degree() + 5);
    auto an = an_series(E, prec);
    std::vector<Fp> c(prec, Fp(0, p));
    for (std::size_t i = 0; i < prec - 1; ++i) c[i + 1] = Fp::from_int(an[i], p);
    QSeries g(p, 0, std::move(c));
    g.set_weight(k);

    CurveAnalysis a;
    a.label = E.label();
    a.p = p;
    a.eps = root_number(E);
    a.divisor_poly = divisor_polynomial(g, p);
    a.s_p = locus.s_p_count();

    PolyFp2 F = PolyFp2::lift(a.divisor_poly.poly);
    for (std::size_t i = 0; i < locus.n(); ++i) {
        bool fzero = F.eval(locus.cls(i).j).is_zero();
        bool vzero = mpz_divisible_ui_p(eigenform.v[i].get_mpz_t(),
                                        static_cast<unsigned long>(p)) != 0;
        if (fzero) {
            a.ss_zero_indices.push_back(i);
            if (locus.in_sp(i)) ++a.n_p;
            else ++a.conjugate_zero_count;
        }
        if (vzero) a.v_zero_indices.push_back(i);
        if (locus.in_sp(i) && mpz_odd_p(eigenform.v[i].get_mpz_t())) a.all_even_on_sp = false;
    }
    a.ratio = BigRat(static_cast<long>(a.n_p), static_cast<long>(a.s_p));
    a.ratio.canonicalize();

    // stored invariants
    if (a.ss_zero_indices != a.v_zero_indices)
        throw internal_consistency_error(
            "analyze: supersingular zero set of F(F_E, x) differs from the mod-p vanishing "
            "set of v_E for " + E.label());
    if (a.eps == -1) {
        for (std::size_t i : locus.s_p())
            if (!std::binary_search(a.ss_zero_indices.begin(), a.ss_zero_indices.end(), i))
                throw internal_consistency_error(
                    "analyze: root number -1 but an F_p-rational class is not a zero for " +
                    E.label());
    }
    return a;
}

ConjectureResult conjecture1_check(const CurveAnalysis& analysis, const Eigenform& eigenform,
                                   const SsLocus& locus, std::optional<int> rank) {
    ConjectureResult r;
    if (analysis.eps != 1) {
        r.note = "root number != +1";
        return r;
    }
    if (!rank) {
        r.note = "rank unknown";
        return r;
    }
    if (*rank == 0) {
        r.note = "rank 0";
        return r;
    }
    for (std::size_t i : locus.s_p()) {
        if (mpz_odd_p(eigenform.v[i].get_mpz_t())) {
            r.verdict = ConjectureVerdict::counterexample;
            r.offending_index = i;
            return r;
        }
    }
    r.verdict = ConjectureVerdict::confirmed_even;
    return r;
}

CheckVerdict theorem_even_check(const CurveQ& E, const Eigenform& eigenform,
                                const SsLocus& locus) {
    if (E.disc_sign() != 1 || E.has_rational_two_torsion()) return CheckVerdict::not_applicable;
    for (std::size_t i : locus.s_p())
        if (mpz_odd_p(eigenform.v[i].get_mpz_t())) return CheckVerdict::fail;
    return CheckVerdict::pass;
}

std::vector<GrossWaldspurgerEntry> gross_waldspurger_check(const CurveQ& E,
                                                           const Eigenform& eigenform,
                                                           const SsLocus& locus) {
    std::vector<GrossWaldspurgerEntry> out;
    const bool assert_zero = root_number(E) == 1 && E.rank() && *E.rank() > 0;
    std::vector<BigRat> v(eigenform.v.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = BigRat(eigenform.v[i]);
    for (const CMSeed& s : cm_seed_table()) {
        if (legendre(-BigInt(s.D), locus.p()) != -1) continue;
        DivisorVector b = b_divisor(locus, s.D);
        GrossWaldspurgerEntry e;
        e.D = s.D;
        e.m_D = pairing(locus, v, b.coeffs);
        e.asserted_zero = assert_zero;
        e.pass = !assert_zero || e.m_D == 0;
        out.push_back(e);
    }
    return out;
}

}  // namespace ssz
