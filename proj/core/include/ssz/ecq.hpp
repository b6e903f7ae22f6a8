#ifndef SSZ_ECQ_HPP
#define SSZ_ECQ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssz/arith.hpp"

namespace ssz {

struct search_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational point in long Weierstrass coordinates, or the point at infinity.
struct RatPoint {
    bool infinity = true;
    BigRat x, y;
};

// Rational elliptic curve of prime conductor p in long Weierstrass form.
// Rank is ingested, never computed.
class CurveQ {
public:
    CurveQ(std::string label, BigInt a1, BigInt a2, BigInt a3, BigInt a4, BigInt a6,
           std::uint64_t conductor, std::optional<int> rank = std::nullopt);

    const std::string& label() const { return label_; }
    const BigInt& a1() const { return a1_; }
    const BigInt& a2() const { return a2_; }
    const BigInt& a3() const { return a3_; }
    const BigInt& a4() const { return a4_; }
    const BigInt& a6() const { return a6_; }
    const BigInt& c4() const { return c4_; }
    const BigInt& c6() const { return c6_; }
    const BigInt& disc() const { return disc_; }
    std::uint64_t conductor() const { return p_; }
    std::optional<int> rank() const { return rank_; }

    int disc_sign() const { return sgn(disc_); }
    // Rational root of the 2-division cubic 4x^3 + b2 x^2 + 2 b4 x + b6.
    bool has_rational_two_torsion() const;

    // Group law over Q.
    bool on_curve(const RatPoint& P) const;
    RatPoint negate(const RatPoint& P) const;
    RatPoint add(const RatPoint& P, const RatPoint& Q) const;
    // Order of P if <= bound, else nullopt.
    std::optional<int> point_order(const RatPoint& P, int bound = 16) const;

private:
    static int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }
    std::string label_;
    BigInt a1_, a2_, a3_, a4_, a6_;
    BigInt b2_, b4_, b6_, b8_;
    BigInt c4_, c6_, disc_;
    std::uint64_t p_;
    std::optional<int> rank_;
};

// a_ell: for good ell, ell + 1 - #E(F_ell) by exhaustive count; for ell = p,
// +1/-1 by the split/nonsplit tangent test at the node.
int ap(const CurveQ& E, std::uint64_t ell);

// a_1..a_N by multiplicativity and the Hecke recurrence.
std::vector<std::int64_t> an_series(const CurveQ& E, std::size_t N);

// eps = a_p (from T_p + W_p = 0 and eps = -lambda(W_p)).
int root_number(const CurveQ& E);

struct TorsionResult {
    int order = 1;
    bool witnessed = false;  // false = gcd heuristic only, no point of exact order found
    RatPoint witness;
};

TorsionResult torsion_order(const CurveQ& E);

// Smallest odd prime ell != p with (-p/ell) = -1 and a_ell odd; search bound 10^4.
std::uint64_t find_odd_anomalous_prime(const CurveQ& E);

}  // namespace ssz

#endif
