#ifndef SSZ_QUAT_HPP
#define SSZ_QUAT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssz/arith.hpp"
#include "ssz/ecq.hpp"
#include "ssz/ssloc.hpp"

namespace ssz {

struct internal_consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_index : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct eigenform_not_found : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct insufficient_operators : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Classical modular polynomial Phi_ell as symmetric coefficients c[a][b],
// 0 <= a, b <= ell+1.  Only ell = 2, 3 are embedded.
const std::vector<std::vector<BigInt>>& modular_polynomial(int ell);

struct BrandtMatrix {
    std::uint64_t p = 0;
    std::uint64_t m = 0;  // Hecke index
    std::vector<std::vector<std::int64_t>> entries;  // n x n, nonnegative

    std::size_t n() const { return entries.size(); }
    std::vector<BigInt> transpose_apply(const std::vector<BigInt>& v) const;
    BrandtMatrix operator*(const BrandtMatrix& o) const;
    bool operator==(const BrandtMatrix& o) const { return entries == o.entries; }
};

// B(ell) for ell in {2,3} via root multiplicities of Phi_ell(j_i, X) over F_p^2
// (Kronecker relation).  Checks row sums, weight symmetry, conjugation
// symmetry and the involution property before returning.
BrandtMatrix brandt_prime(const SsLocus& locus, int ell);

// B(p): the permutation matrix of the Frobenius involution.
BrandtMatrix brandt_p(const SsLocus& locus);

// Row sums, weight symmetry and conjugation symmetry of a prime Brandt
// matrix; throws internal_consistency_error on any violation.  Used both
// after construction and when re-admitting cached matrices.
void validate_brandt(const SsLocus& locus, const BrandtMatrix& B, std::int64_t expected_row_sum);

// Shared per-locus cache of B(2), B(3), B(p); read-only after construction.
struct BrandtCache {
    explicit BrandtCache(const SsLocus& locus);
    BrandtCache(const SsLocus& locus, BrandtMatrix b2, BrandtMatrix b3, BrandtMatrix bp);
    const SsLocus* locus;
    BrandtMatrix b2, b3, bp;
};

// B(m) for m with prime factors in {2, 3, p}, via the Hecke recurrences.
BrandtMatrix hecke(std::uint64_t m, const BrandtCache& cache);

// <u, v> = sum w_i u_i v_i.
BigRat pairing(const SsLocus& locus, const std::vector<BigRat>& u, const std::vector<BigRat>& v);
BigInt pairing(const SsLocus& locus, const std::vector<BigInt>& u, const std::vector<BigInt>& v);

struct Eigenform {
    std::uint64_t p = 0;
    std::string curve_label;
    std::vector<BigInt> v;                      // primitive, first nonzero entry > 0
    std::map<std::uint64_t, std::int64_t> eigenvalues;  // a_m used in extraction/verification
};

// Primitive integer eigenvector of the transposed Brandt matrices with the
// curve's Hecke eigenvalues; verified for all supported m <= 20.
Eigenform extract_eigenform(const BrandtCache& cache, const CurveQ& E);

struct DivisorVector {
    std::vector<BigRat> coeffs;
};

// b_D for class-number-one D with (-D/p) = -1: supported on the single CM
// seed class with coefficient 2/u(-D).
DivisorVector b_divisor(const SsLocus& locus, int D);

struct ParityReport {
    bool evenness_applicable = false;  // (-p/ell) = -1 for the given ell
    bool evenness_pass = true;         // B_ij(ell) even on S_p x S_p
    bool conjugation_pass = true;      // B_ij(m) = B_conj(i)conj(j)(m)
    bool eigen_conj_pass = true;       // v(e_j) = a_p * v(e_conj(j))
    std::vector<std::string> failures;
};

ParityReport parity_checks(const SsLocus& locus, const BrandtMatrix& Bl,
                           const Eigenform* eigenform = nullptr, int a_p = 0);

}  // namespace ssz

#endif
