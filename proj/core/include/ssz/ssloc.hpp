#ifndef SSZ_SSLOC_HPP
#define SSZ_SSLOC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ssz/arith.hpp"

namespace ssz {

struct SsClass {
    std::size_t index = 0;  // 0-based position in the canonical order
    Fp2 j;
    int weight = 1;          // w_i = half the automorphism count
    std::size_t conj = 0;    // index of the Frobenius-conjugate class
};

// The supersingular locus mod p: classes in canonical order (F_p-rational
// first, ascending; then conjugate pairs ascending), weights, Frobenius
// involution, and the F_p-rational subset S_p.
class SsLocus {
public:
    explicit SsLocus(std::uint64_t p);
    // Rebuild from previously computed classes (e.g. a cache); the canonical
    // order, weight rule, Frobenius involution and mass are all re-verified.
    SsLocus(std::uint64_t p, std::vector<SsClass> classes);

    std::uint64_t p() const { return p_; }
    std::size_t n() const { return classes_.size(); }
    const std::vector<SsClass>& classes() const { return classes_; }
    const SsClass& cls(std::size_t i) const { return classes_.at(i); }
    const std::vector<std::size_t>& s_p() const { return sp_; }
    std::size_t s_p_count() const { return sp_.size(); }
    bool in_sp(std::size_t i) const { return classes_.at(i).conj == i; }

    // Sum 1/w_i; equals (p-1)/12 by Eichler's mass formula.
    BigRat mass() const;

private:
    std::uint64_t p_;
    std::vector<SsClass> classes_;
    std::vector<std::size_t> sp_;
};

// Number of reduced primitive binary quadratic forms of discriminant -D.
int class_number(std::uint64_t D);

// Eichler's class-number expression for s_p = #S_p.  For p = 1 mod 4 the
// discriminant -4p is used for h(-p).
int s_p_formula(std::uint64_t p);

struct CMSeed {
    int D;        // 3, 4, 7, 8, 11, 19, 43, 67, 163
    BigInt j;     // the class-number-one CM j-invariant
    int units;    // u(-D): 3 for D=3, 2 for D=4, else 1
};

const std::vector<CMSeed>& cm_seed_table();

// Class index with j = j_D mod p when (-D/p) = -1 (then j_D is supersingular);
// nullopt when p is not inert.
std::optional<std::size_t> cm_seed_class(const SsLocus& locus, int D);

}  // namespace ssz

#endif
