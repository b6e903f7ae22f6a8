#ifndef SSZ_DIVISOR_HPP
#define SSZ_DIVISOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssz/ecq.hpp"
#include "ssz/qseries.hpp"
#include "ssz/quat.hpp"
#include "ssz/ssloc.hpp"

namespace ssz {

struct CurveAnalysis {
    std::string label;
    std::uint64_t p = 0;
    int eps = 0;  // root number
    DivisorPoly divisor_poly;
    std::vector<std::size_t> ss_zero_indices;   // classes where F(F_E, j_i) = 0
    std::vector<std::size_t> v_zero_indices;    // classes where v_E(e_i) = 0 mod p
    std::size_t n_p = 0;                        // zeros with j in F_p
    std::size_t conjugate_zero_count = 0;       // zeros outside F_p (reported, unasserted)
    bool all_even_on_sp = true;                 // v_E even on S_p
    BigRat ratio;                               // N_p / s_p
    std::size_t s_p = 0;
};

// Divisor polynomial of F_E (via the Serre congruence f_E = F_E mod p), its
// supersingular zero set, and the zero-set comparison with the eigenform.
// Both stored invariants (the zero-set equality and the root-number
// containment) are verified before returning.
CurveAnalysis analyze(const CurveQ& E, const SsLocus& locus, const Eigenform& eigenform);

enum class ConjectureVerdict { confirmed_even, counterexample, not_applicable };

struct ConjectureResult {
    ConjectureVerdict verdict = ConjectureVerdict::not_applicable;
    std::optional<std::size_t> offending_index;
    std::string note;
};

// Evenness of v_E on S_p for eps = +1, rank > 0 curves.
ConjectureResult conjecture1_check(const CurveAnalysis& analysis, const Eigenform& eigenform,
                                   const SsLocus& locus, std::optional<int> rank);

enum class CheckVerdict { pass, fail, not_applicable };

// Positive discriminant + no rational 2-torsion => v_E even on S_p.
CheckVerdict theorem_even_check(const CurveQ& E, const Eigenform& eigenform,
                                const SsLocus& locus);

struct GrossWaldspurgerEntry {
    int D = 0;
    BigRat m_D;
    bool asserted_zero = false;  // eps = +1 and rank >= 1: m_D must vanish
    bool pass = true;
};

// m_D = <v_E, b_D> over class-number-one D with (-D/p) = -1.
std::vector<GrossWaldspurgerEntry> gross_waldspurger_check(const CurveQ& E,
                                                           const Eigenform& eigenform,
                                                           const SsLocus& locus);

}  // namespace ssz

#endif
