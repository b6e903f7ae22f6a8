#ifndef SSZ_ARITH_HPP
#define SSZ_ARITH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ssz {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

// Legendre symbol (a/p) for odd prime p.  Throws invalid_input otherwise.
int legendre(const BigInt& a, std::uint64_t p);
inline int legendre(std::int64_t a, std::uint64_t p) { return legendre(BigInt(a), p); }

// Residue mod a fixed odd prime p >= 5.  Modulus fits in 63 bits; products
// go through 128-bit intermediates.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p);
    static Fp from_int(const BigInt& value, std::uint64_t p);
    static Fp from_int(std::int64_t value, std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(Fp o) const;
    Fp operator-(Fp o) const;
    Fp operator-() const;
    Fp operator*(Fp o) const;
    Fp inv() const;
    Fp operator/(Fp o) const { return *this * o.inv(); }
    Fp pow(std::uint64_t e) const;

    bool operator==(Fp o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(Fp o) const { return !(*this == o); }

private:
    std::uint64_t v_;
    std::uint64_t p_;
};

// Square root in F_p; picks the root with the smaller integer representative.
std::optional<Fp> sqrt_mod_p(Fp a);

// Smallest positive quadratic nonresidue mod p.
std::uint64_t quadratic_nonresidue(std::uint64_t p);

// a + b*sqrt(t) with t the smallest positive nonresidue mod p.
class Fp2 {
public:
    Fp2() = default;
    Fp2(Fp a, Fp b);
    static Fp2 from_base(Fp a);

    Fp a() const { return a_; }
    Fp b() const { return b_; }
    std::uint64_t modulus() const { return a_.modulus(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_base_field() const { return b_.is_zero(); }

    Fp2 operator+(const Fp2& o) const;
    Fp2 operator-(const Fp2& o) const;
    Fp2 operator-() const;
    Fp2 operator*(const Fp2& o) const;
    Fp2 inv() const;
    Fp2 operator/(const Fp2& o) const { return *this * o.inv(); }
    Fp2 pow(std::uint64_t e) const;
    Fp2 frobenius() const;  // a + b*sqrt(t) -> a - b*sqrt(t)

    bool operator==(const Fp2& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }
    // Canonical order by (integer rep of a, integer rep of b).
    bool operator<(const Fp2& o) const;

    std::string str() const;

private:
    Fp a_, b_;
};

// Dense polynomial over F_p, low degree first; normalized so the leading
// coefficient is nonzero unless zero.
class PolyFp {
public:
    PolyFp() : p_(0) {}
    explicit PolyFp(std::uint64_t p) : p_(p) {}
    PolyFp(std::vector<Fp> coeffs, std::uint64_t p);

    static PolyFp x_minus(Fp r);
    static PolyFp constant(Fp c);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Fp coeff(std::size_t i) const;
    Fp leading() const;
    const std::vector<Fp>& coeffs() const { return c_; }

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    std::pair<PolyFp, PolyFp> divmod(const PolyFp& o) const;
    PolyFp operator%(const PolyFp& o) const { return divmod(o).second; }
    PolyFp monic() const;
    PolyFp derivative() const;
    Fp eval(Fp x) const;
    Fp2 eval(const Fp2& x) const;

    bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }

    std::string str() const;

private:
    void normalize();
    std::uint64_t p_;
    std::vector<Fp> c_;
};

PolyFp gcd(const PolyFp& a, const PolyFp& b);

class PolyFp2 {
public:
    PolyFp2() : p_(0) {}
    explicit PolyFp2(std::uint64_t p) : p_(p) {}
    PolyFp2(std::vector<Fp2> coeffs, std::uint64_t p);

    static PolyFp2 lift(const PolyFp& f);
    static PolyFp2 x_minus(const Fp2& r);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Fp2 coeff(std::size_t i) const;
    Fp2 leading() const;
    const std::vector<Fp2>& coeffs() const { return c_; }

    PolyFp2 operator+(const PolyFp2& o) const;
    PolyFp2 operator-(const PolyFp2& o) const;
    PolyFp2 operator*(const PolyFp2& o) const;
    std::pair<PolyFp2, PolyFp2> divmod(const PolyFp2& o) const;
    PolyFp2 operator%(const PolyFp2& o) const { return divmod(o).second; }
    PolyFp2 monic() const;
    Fp2 eval(const Fp2& x) const;

    bool operator==(const PolyFp2& o) const { return p_ == o.p_ && c_ == o.c_; }

private:
    void normalize();
    std::uint64_t p_;
    std::vector<Fp2> c_;
};

PolyFp2 gcd(const PolyFp2& a, const PolyFp2& b);

// Every root of f in F_p^2 with its exact multiplicity, sorted canonically.
// Splitting uses a PRNG with a fixed default seed for reproducibility.
std::vector<std::pair<Fp2, int>> roots_in_fp2(const PolyFp& f, std::uint64_t seed = 0x5353u);

// Exact multiplicity of r as a root of f (0 if not a root).
int root_multiplicity(const PolyFp2& f, const Fp2& r);

// Basis of the right rational kernel of M, each vector scaled to integer
// entries with gcd 1 and first nonzero entry positive.  Bareiss fraction-free
// elimination; deterministic.
std::vector<std::vector<BigInt>> primitive_integer_kernel(
    const std::vector<std::vector<BigRat>>& M);

}  // namespace ssz

#endif
