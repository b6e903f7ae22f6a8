#include "ssz/qseries.hpp"

#include <algorithm>

namespace ssz {

QSeries::QSeries(std::uint64_t p, std::int64_t lowest, std::vector<Fp> coeffs,
                 std::optional<int> weight)
    : p_(p), v_(lowest), c_(std::move(coeffs)), weight_(weight) {}

QSeries QSeries::zero(std::uint64_t p, std::int64_t abs_prec) {
    return QSeries(p, abs_prec, {});
}

QSeries QSeries::one(std::uint64_t p, std::int64_t abs_prec) {
    std::vector<Fp> c(static_cast<std::size_t>(std::max<std::int64_t>(abs_prec, 1)), Fp(0, p));
    c[0] = Fp(1, p);
    return QSeries(p, 0, std::move(c));
}

Fp QSeries::coeff(std::int64_t e) const {
    if (e >= abs_precision()) throw invalid_input("QSeries::coeff beyond precision");
    if (e < v_) return Fp(0, p_);
    return c_[static_cast<std::size_t>(e - v_)];
}

void QSeries::trim_front() {
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++v_;
    }
}

QSeries QSeries::operator+(const QSeries& o) const {
    std::int64_t lo = std::min(v_, o.v_);
    std::int64_t hi = std::min(abs_precision(), o.abs_precision());
    std::vector<Fp> c;
    for (std::int64_t e = lo; e < hi; ++e) c.push_back(coeff(e) + o.coeff(e));
    QSeries r(p_, lo, std::move(c));
    r.trim_front();
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    std::int64_t lo = std::min(v_, o.v_);
    std::int64_t hi = std::min(abs_precision(), o.abs_precision());
    std::vector<Fp> c;
    for (std::int64_t e = lo; e < hi; ++e) c.push_back(coeff(e) - o.coeff(e));
    QSeries r(p_, lo, std::move(c));
    r.trim_front();
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    // exact below min(v1 + A2, v2 + A1)
    std::int64_t lo = v_ + o.v_;
    std::int64_t hi = std::min(v_ + o.abs_precision(), o.v_ + abs_precision());
    if (c_.empty() || o.c_.empty()) return QSeries::zero(p_, hi);
    std::vector<Fp> c(static_cast<std::size_t>(hi - lo), Fp(0, p_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::size_t jmax = std::min(o.c_.size(), static_cast<std::size_t>(hi - lo) - i);
        for (std::size_t j = 0; j < jmax; ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    }
    return QSeries(p_, lo, std::move(c));
}

QSeries QSeries::inv() const {
    if (c_.empty() || c_[0].is_zero())
        throw invalid_input("QSeries::inv: leading coefficient not invertible");
    Fp c0i = c_[0].inv();
    std::vector<Fp> b(c_.size(), Fp(0, p_));
    b[0] = c0i;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Fp s(0, p_);
        for (std::size_t k = 1; k <= n; ++k) s = s + c_[k] * b[n - k];
        b[n] = -(c0i * s);
    }
    return QSeries(p_, -v_, std::move(b));
}

QSeries QSeries::pow(std::uint64_t e) const {
    if (e == 0) return QSeries::one(p_, abs_precision() - v_);
    QSeries b = *this;
    QSeries acc = b;
    e -= 1;
    while (e) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return acc;
}

QSeries QSeries::truncate(std::int64_t abs_prec) const {
    if (abs_prec >= abs_precision()) return *this;
    std::int64_t n = std::max<std::int64_t>(abs_prec - v_, 0);
    std::vector<Fp> c(c_.begin(), c_.begin() + n);
    return QSeries(p_, v_, std::move(c), weight_);
}

bool QSeries::identically_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Fp x) { return x.is_zero(); });
}

QSeries eisenstein(int weight, std::uint64_t p, std::size_t terms) {
    if (terms < 1) throw invalid_input("eisenstein: need at least one term");
    if (weight != 4 && weight != 6) throw invalid_input("eisenstein: weight must be 4 or 6");
    std::vector<Fp> c(terms, Fp(0, p));
    c[0] = Fp(1, p);
    const int k = weight - 1;
    const std::int64_t scale = weight == 4 ? 240 : -504;
    // sigma_k(n) mod p via divisor sieve
    std::vector<std::uint64_t> sig(terms, 0);
    for (std::size_t d = 1; d < terms; ++d) {
        std::uint64_t dk = 1;
        for (int i = 0; i < k; ++i) dk = (unsigned __int128)dk * d % p;
        for (std::size_t n = d; n < terms; n += d) sig[n] = (sig[n] + dk) % p;
    }
    Fp sc = Fp::from_int(scale, p);
    for (std::size_t n = 1; n < terms; ++n) c[n] = sc * Fp(sig[n], p);
    QSeries r(p, 0, std::move(c));
    r.set_weight(weight);
    return r;
}

QSeries delta(std::uint64_t p, std::size_t terms) {
    if (terms < 2) throw invalid_input("delta: need at least two terms");
    // eta-product unit: prod (1-q^n) by the pentagonal number theorem
    std::vector<Fp> eta(terms, Fp(0, p));
    for (std::int64_t k = 0;; ++k) {
        std::int64_t e1 = k * (3 * k - 1) / 2;
        std::int64_t e2 = k * (3 * k + 1) / 2;
        if (e1 >= static_cast<std::int64_t>(terms) && e2 >= static_cast<std::int64_t>(terms)) break;
        Fp s = (k % 2 == 0) ? Fp(1, p) : Fp(p - 1, p);
        if (e1 < static_cast<std::int64_t>(terms)) eta[e1] = eta[e1] + s;
        if (k > 0 && e2 < static_cast<std::int64_t>(terms)) eta[e2] = eta[e2] + s;
        if (k == 0) continue;
    }
    QSeries u(p, 0, std::move(eta));
    QSeries u24 = u.pow(24);
    // shift by q
    std::vector<Fp> c(terms, Fp(0, p));
    for (std::size_t i = 0; i + 1 < terms; ++i) c[i + 1] = u24.coeff(static_cast<std::int64_t>(i));
    QSeries r(p, 1, std::vector<Fp>(c.begin() + 1, c.end()));
    r.set_weight(12);
    return r;
}

QSeries j_series(std::uint64_t p, std::size_t terms) {
    std::size_t t = terms + 2;
    QSeries e4 = eisenstein(4, p, t);
    QSeries d = delta(p, t);
    QSeries e43 = e4 * e4 * e4;
    // 1/Delta = q^-1 * inverse of the unit part
    QSeries j = e43 * d.inv();
    j.set_weight(0);
    return j.truncate(j.lowest() + static_cast<std::int64_t>(terms));
}

int m_of(int k) {
    if (k % 2 != 0) throw invalid_input("m_of: k must be even");
    int fl = k >= 0 ? k / 12 : -((-k + 11) / 12);
    int r = ((k % 12) + 12) % 12;
    return r == 2 ? fl - 1 : fl;
}

QSeries tilde_e(int k, std::uint64_t p, std::size_t terms) {
    if (k % 2 != 0) throw invalid_input("tilde_e: k must be even");
    QSeries e4 = eisenstein(4, p, terms);
    QSeries e6 = eisenstein(6, p, terms);
    switch (((k % 12) + 12) % 12) {
        case 0: return QSeries::one(p, static_cast<std::int64_t>(terms));
        case 2: return e4 * e4 * e6;
        case 4: return e4;
        case 6: return e6;
        case 8: return e4 * e4;
        case 10: return e4 * e6;
        default: throw invalid_input("tilde_e: k must be even");
    }
}

PolyFp h_poly(int k, std::uint64_t p) {
    if (k % 2 != 0) throw invalid_input("h_poly: k must be even");
    Fp c1728 = Fp::from_int(std::int64_t{1728}, p);
    PolyFp x({Fp(0, p), Fp(1, p)}, p);
    PolyFp xm = PolyFp::x_minus(c1728);
    switch (((k % 12) + 12) % 12) {
        case 0: return PolyFp::constant(Fp(1, p));
        case 2: return x * x * xm;
        case 4: return x;
        case 6: return xm;
        case 8: return x * x;
        case 10: return x * xm;
        default: throw invalid_input("h_poly: k must be even");
    }
}

std::vector<Fp> DivisorPoly::monomial_view() const {
    auto [ft, rem] = poly.divmod(h);
    if (!rem.is_zero())
        throw invalid_input("monomial_view: h_k does not divide F exactly");
    std::vector<Fp> out;
    for (int i = ft.degree(); i >= 0; --i) out.push_back(ft.coeff(static_cast<std::size_t>(i)));
    return out;
}

DivisorPoly divisor_polynomial(const QSeries& g, std::uint64_t p) {
    if (!g.weight()) throw invalid_input("divisor_polynomial: series carries no weight tag");
    const int k = *g.weight();
    const int m = m_of(k);
    PolyFp h = h_poly(k, p);
    const int dh = h.degree();
    const int d = m + dh;  // degree bound for F
    if (g.abs_precision() < d + 5)
        throw invalid_input("divisor_polynomial: insufficient precision");

    const std::size_t terms = static_cast<std::size_t>(g.abs_precision() + d + dh + 4);
    QSeries j = j_series(p, terms);
    QSeries dd = delta(p, terms);
    QSeries et = tilde_e(k, p, terms);

    // basis: Delta^m * Etilde * j^i, i = 0..d
    QSeries base = et;
    for (int i = 0; i < m; ++i) base = base * dd;
    std::vector<QSeries> basis;
    basis.reserve(static_cast<std::size_t>(d + 1));
    QSeries cur = base;
    basis.push_back(cur);
    for (int i = 1; i <= d; ++i) {
        cur = cur * j;
        basis.push_back(cur);
    }
    // target: g * h(j)
    QSeries hj = QSeries::zero(p, j.abs_precision());
    {
        QSeries jp = QSeries::one(p, j.abs_precision());
        for (int i = 0; i <= dh; ++i) {
            if (!h.coeff(static_cast<std::size_t>(i)).is_zero()) {
                // scalar multiple, no precision loss
                std::vector<Fp> c;
                for (std::int64_t e = jp.lowest(); e < jp.abs_precision(); ++e)
                    c.push_back(jp.coeff(e) * h.coeff(static_cast<std::size_t>(i)));
                hj = hj + QSeries(p, jp.lowest(), std::move(c));
            }
            if (i < dh) jp = jp * j;
        }
    }
    QSeries target = g * hj;

    std::int64_t lo = target.lowest();
    std::int64_t hi = target.abs_precision();
    for (const auto& b : basis) {
        lo = std::min(lo, b.lowest());
        hi = std::min(hi, b.abs_precision());
    }
    const std::int64_t nrows = hi - lo;
    if (nrows < d + 2) throw invalid_input("divisor_polynomial: insufficient precision");

    // Gaussian elimination mod p on the (nrows) x (d+2) augmented system.
    std::vector<std::vector<Fp>> A(static_cast<std::size_t>(nrows),
                                   std::vector<Fp>(static_cast<std::size_t>(d + 2), Fp(0, p)));
    for (std::int64_t e = lo; e < hi; ++e) {
        auto& row = A[static_cast<std::size_t>(e - lo)];
        for (int i = 0; i <= d; ++i) row[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)].coeff(e);
        row[static_cast<std::size_t>(d + 1)] = target.coeff(e);
    }
    std::vector<Fp> sol(static_cast<std::size_t>(d + 1), Fp(0, p));
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c <= static_cast<std::size_t>(d) && r < A.size(); ++c) {
        std::size_t pr = r;
        while (pr < A.size() && A[pr][c].is_zero()) ++pr;
        if (pr == A.size()) continue;
        std::swap(A[r], A[pr]);
        Fp inv = A[r][c].inv();
        for (auto& x : A[r]) x = x * inv;
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Fp f = A[i][c];
            for (std::size_t jx = c; jx < A[i].size(); ++jx) A[i][jx] = A[i][jx] - f * A[r][jx];
        }
        pivots.push_back(c);
        ++r;
    }
    // rows below the rank must have zero RHS, otherwise g is not a form of this weight
    for (std::size_t i = r; i < A.size(); ++i)
        if (!A[i][static_cast<std::size_t>(d + 1)].is_zero())
            throw not_a_modular_form("divisor_polynomial: inconsistent linear system");
    for (std::size_t i = 0; i < pivots.size(); ++i)
        sol[pivots[i]] = A[i][static_cast<std::size_t>(d + 1)];

    DivisorPoly out;
    out.p = p;
    out.weight = k;
    out.m = m;
    out.h = h;
    out.poly = PolyFp(std::move(sol), p);
    out.ftilde_degree = out.poly.degree() - dh;
    return out;
}

PolyFp supersingular_poly(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw invalid_input("supersingular_poly: p must be a prime >= 5");
    const int k = static_cast<int>(p) - 1;
    const int d = m_of(k) + h_poly(k, p).degree();
    // E_{p-1} is congruent to 1 mod p
    QSeries g = QSeries::one(p, d + 6);
    g.set_weight(k);
    return divisor_polynomial(g, p).poly.monic();
}

}  // namespace ssz
