#ifndef SSZ_QSERIES_HPP
#define SSZ_QSERIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ssz/arith.hpp"

namespace ssz {

struct not_a_modular_form : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated Laurent series in q with coefficients mod p.  Coefficients cover
// exponents lowest() .. lowest()+size()-1; everything below abs_precision()
// is exact.
class QSeries {
public:
    QSeries(std::uint64_t p, std::int64_t lowest, std::vector<Fp> coeffs,
            std::optional<int> weight = std::nullopt);
    static QSeries zero(std::uint64_t p, std::int64_t abs_prec);
    static QSeries one(std::uint64_t p, std::int64_t abs_prec);

    std::uint64_t modulus() const { return p_; }
    std::int64_t lowest() const { return v_; }
    std::int64_t abs_precision() const { return v_ + static_cast<std::int64_t>(c_.size()); }
    std::optional<int> weight() const { return weight_; }
    QSeries& set_weight(int k) { weight_ = k; return *this; }

    Fp coeff(std::int64_t e) const;  // exponent e; must be < abs_precision()

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries inv() const;  // leading coefficient must be invertible
    QSeries pow(std::uint64_t e) const;
    QSeries truncate(std::int64_t abs_prec) const;

    bool identically_zero() const;

private:
    void trim_front();
    std::uint64_t p_;
    std::int64_t v_;
    std::vector<Fp> c_;
    std::optional<int> weight_;
};

// E_4 = 1 + 240 sum sigma_3(n) q^n, E_6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein(int weight, std::uint64_t p, std::size_t terms);

// Delta = q prod (1-q^n)^24.
QSeries delta(std::uint64_t p, std::size_t terms);

// j = E_4^3 / Delta, lowest exponent -1.
QSeries j_series(std::uint64_t p, std::size_t terms);

// Case tables by k mod 12.
int m_of(int k);
QSeries tilde_e(int k, std::uint64_t p, std::size_t terms);
PolyFp h_poly(int k, std::uint64_t p);

struct DivisorPoly {
    std::uint64_t p = 0;
    int weight = 0;
    PolyFp poly;      // F(g, x) = h_k * Ftilde, solved directly
    PolyFp h;         // h_k(x)
    int m = 0;        // m(k)
    int ftilde_degree = 0;  // deg poly - deg h

    // Coefficients c_i of Ftilde when h_k divides poly exactly (k = 0 mod 12
    // case): g = sum c_i Delta^(m-i) E_4^(3i), listed for i = deg .. 0.
    std::vector<Fp> monomial_view() const;
};

// Unique P with deg P <= m(k) + deg h_k and g*h_k(j) = Delta^m(k)*Etilde_k*P(j).
// The overdetermined solve must be exactly consistent.
DivisorPoly divisor_polynomial(const QSeries& g, std::uint64_t p);

// F(E_{p-1}, x) made monic; roots in F_p^2 are the supersingular j-invariants.
PolyFp supersingular_poly(std::uint64_t p);

}  // namespace ssz

#endif
