#include "ssz/arith.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ssz {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin bases for n < 3.3e24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(const BigInt& a, u64 p) {
    if (p == 2 || !is_prime(p)) throw invalid_input("legendre: p must be an odd prime");
    mpz_class pz(static_cast<unsigned long>(p));
    return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

Fp::Fp(u64 value, u64 p) : v_(value % p), p_(p) {}

Fp Fp::from_int(const BigInt& value, u64 p) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class r = value % pz;
    if (r < 0) r += pz;
    return Fp(r.get_ui(), p);
}

Fp Fp::from_int(std::int64_t value, u64 p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<u64>(r), p);
}

Fp Fp::operator+(Fp o) const {
    u64 s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Fp{s, p_};
}

Fp Fp::operator-(Fp o) const {
    return Fp{v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_};
}

Fp Fp::operator-() const { return Fp{v_ == 0 ? 0 : p_ - v_, p_}; }

Fp Fp::operator*(Fp o) const { return Fp{mulmod(v_, o.v_, p_), p_}; }

Fp Fp::inv() const {
    if (v_ == 0) throw invalid_input("Fp::inv: division by zero");
    return Fp{powmod(v_, p_ - 2, p_), p_};
}

Fp Fp::pow(u64 e) const { return Fp{powmod(v_, e, p_), p_}; }

std::optional<Fp> sqrt_mod_p(Fp a) {
    const u64 p = a.modulus();
    if (a.is_zero()) return Fp(0, p);
    if (legendre(BigInt(static_cast<unsigned long>(a.value())), p) == -1) return std::nullopt;
    u64 r;
    if (p % 4 == 3) {
        r = powmod(a.value(), (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        u64 z = quadratic_nonresidue(p);
        u64 c = powmod(z, q, p);
        u64 x = powmod(a.value(), (q + 1) / 2, p);
        u64 t = powmod(a.value(), q, p);
        int m = s;
        while (t != 1) {
            u64 tt = t;
            int i = 0;
            while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
            x = mulmod(x, b, p);
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            m = i;
        }
        r = x;
    }
    u64 other = p - r;
    return Fp(std::min(r, other), p);
}

std::uint64_t quadratic_nonresidue(u64 p) {
    for (u64 t = 2;; ++t) {
        if (powmod(t, (p - 1) / 2, p) == p - 1) return t;
    }
}

Fp2::Fp2(Fp a, Fp b) : a_(a), b_(b) {}

Fp2 Fp2::from_base(Fp a) { return Fp2(a, Fp(0, a.modulus())); }

Fp2 Fp2::operator+(const Fp2& o) const { return Fp2(a_ + o.a_, b_ + o.b_); }
Fp2 Fp2::operator-(const Fp2& o) const { return Fp2(a_ - o.a_, b_ - o.b_); }
Fp2 Fp2::operator-() const { return Fp2(-a_, -b_); }

Fp2 Fp2::operator*(const Fp2& o) const {
    Fp t(quadratic_nonresidue(modulus()), modulus());
    return Fp2(a_ * o.a_ + t * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

Fp2 Fp2::inv() const {
    // norm = a^2 - t b^2, nonzero for nonzero elements
    Fp t(quadratic_nonresidue(modulus()), modulus());
    Fp n = a_ * a_ - t * b_ * b_;
    Fp ni = n.inv();
    return Fp2(a_ * ni, -(b_ * ni));
}

Fp2 Fp2::pow(u64 e) const {
    Fp2 r = Fp2::from_base(Fp(1, modulus()));
    Fp2 base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Fp2 Fp2::frobenius() const { return Fp2(a_, -b_); }

bool Fp2::operator<(const Fp2& o) const {
    if (a_.value() != o.a_.value()) return a_.value() < o.a_.value();
    return b_.value() < o.b_.value();
}

std::string Fp2::str() const {
    std::ostringstream os;
    if (b_.is_zero()) {
        os << a_.value();
    } else {
        os << a_.value() << "+" << b_.value() << "*s";
    }
    return os.str();
}

PolyFp::PolyFp(std::vector<Fp> coeffs, u64 p) : p_(p), c_(std::move(coeffs)) { normalize(); }

void PolyFp::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyFp PolyFp::x_minus(Fp r) { return PolyFp({-r, Fp(1, r.modulus())}, r.modulus()); }
PolyFp PolyFp::constant(Fp c) { return PolyFp({c}, c.modulus()); }

Fp PolyFp::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fp(0, p_); }

Fp PolyFp::leading() const {
    if (c_.empty()) throw invalid_input("leading coefficient of zero polynomial");
    return c_.back();
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    std::vector<Fp> r(std::max(c_.size(), o.c_.size()), Fp(0, p_));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return PolyFp(std::move(r), p_);
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
    std::vector<Fp> r(std::max(c_.size(), o.c_.size()), Fp(0, p_));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return PolyFp(std::move(r), p_);
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
    if (is_zero() || o.is_zero()) return PolyFp(p_);
    std::vector<Fp> r(c_.size() + o.c_.size() - 1, Fp(0, p_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return PolyFp(std::move(r), p_);
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& o) const {
    if (o.is_zero()) throw invalid_input("division by zero polynomial");
    PolyFp q(p_), r = *this;
    Fp linv = o.leading().inv();
    std::vector<Fp> qc(degree() >= o.degree() ? degree() - o.degree() + 1 : 0, Fp(0, p_));
    while (!r.is_zero() && r.degree() >= o.degree()) {
        Fp f = r.leading() * linv;
        int shift = r.degree() - o.degree();
        qc[shift] = f;
        std::vector<Fp> sub(shift + o.c_.size(), Fp(0, p_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) sub[shift + i] = o.c_[i] * f;
        r = r - PolyFp(std::move(sub), p_);
    }
    return {PolyFp(std::move(qc), p_), r};
}

PolyFp PolyFp::monic() const {
    if (is_zero()) return *this;
    Fp li = leading().inv();
    std::vector<Fp> r = c_;
    for (auto& x : r) x = x * li;
    return PolyFp(std::move(r), p_);
}

PolyFp PolyFp::derivative() const {
    if (c_.size() <= 1) return PolyFp(p_);
    std::vector<Fp> r(c_.size() - 1, Fp(0, p_));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Fp(i % p_, p_);
    return PolyFp(std::move(r), p_);
}

Fp PolyFp::eval(Fp x) const {
    Fp r(0, p_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Fp2 PolyFp::eval(const Fp2& x) const {
    Fp2 r = Fp2::from_base(Fp(0, p_));
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Fp2::from_base(c_[i]);
    return r;
}

std::string PolyFp::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Fp c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c.value() != 1) os << c.value();
        if (i > 0) {
            if (c.value() != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
    PolyFp x = a, y = b;
    while (!y.is_zero()) {
        PolyFp r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

PolyFp2::PolyFp2(std::vector<Fp2> coeffs, u64 p) : p_(p), c_(std::move(coeffs)) { normalize(); }

void PolyFp2::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyFp2 PolyFp2::lift(const PolyFp& f) {
    std::vector<Fp2> c;
    c.reserve(f.coeffs().size());
    for (Fp x : f.coeffs()) c.push_back(Fp2::from_base(x));
    return PolyFp2(std::move(c), f.modulus());
}

PolyFp2 PolyFp2::x_minus(const Fp2& r) {
    return PolyFp2({-r, Fp2::from_base(Fp(1, r.modulus()))}, r.modulus());
}

Fp2 PolyFp2::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Fp2::from_base(Fp(0, p_));
}

Fp2 PolyFp2::leading() const {
    if (c_.empty()) throw invalid_input("leading coefficient of zero polynomial");
    return c_.back();
}

PolyFp2 PolyFp2::operator+(const PolyFp2& o) const {
    std::vector<Fp2> r(std::max(c_.size(), o.c_.size()), Fp2::from_base(Fp(0, p_)));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return PolyFp2(std::move(r), p_);
}

PolyFp2 PolyFp2::operator-(const PolyFp2& o) const {
    std::vector<Fp2> r(std::max(c_.size(), o.c_.size()), Fp2::from_base(Fp(0, p_)));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return PolyFp2(std::move(r), p_);
}

PolyFp2 PolyFp2::operator*(const PolyFp2& o) const {
    if (is_zero() || o.is_zero()) return PolyFp2(p_);
    std::vector<Fp2> r(c_.size() + o.c_.size() - 1, Fp2::from_base(Fp(0, p_)));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return PolyFp2(std::move(r), p_);
}

std::pair<PolyFp2, PolyFp2> PolyFp2::divmod(const PolyFp2& o) const {
    if (o.is_zero()) throw invalid_input("division by zero polynomial");
    PolyFp2 r = *this;
    Fp2 linv = o.leading().inv();
    std::vector<Fp2> qc(degree() >= o.degree() ? degree() - o.degree() + 1 : 0,
                        Fp2::from_base(Fp(0, p_)));
    while (!r.is_zero() && r.degree() >= o.degree()) {
        Fp2 f = r.leading() * linv;
        int shift = r.degree() - o.degree();
        qc[shift] = f;
        std::vector<Fp2> sub(shift + o.c_.size(), Fp2::from_base(Fp(0, p_)));
        for (std::size_t i = 0; i < o.c_.size(); ++i) sub[shift + i] = o.c_[i] * f;
        r = r - PolyFp2(std::move(sub), p_);
    }
    return {PolyFp2(std::move(qc), p_), r};
}

PolyFp2 PolyFp2::monic() const {
    if (is_zero()) return *this;
    Fp2 li = leading().inv();
    std::vector<Fp2> r = c_;
    for (auto& x : r) x = x * li;
    return PolyFp2(std::move(r), p_);
}

Fp2 PolyFp2::eval(const Fp2& x) const {
    Fp2 r = Fp2::from_base(Fp(0, p_));
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

PolyFp2 gcd(const PolyFp2& a, const PolyFp2& b) {
    PolyFp2 x = a, y = b;
    while (!y.is_zero()) {
        PolyFp2 r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

namespace {

PolyFp2 powmod_poly(const PolyFp2& base, mpz_class e, const PolyFp2& mod) {
    const u64 p = mod.modulus();
    PolyFp2 r({Fp2::from_base(Fp(1, p))}, p);
    PolyFp2 b = base % mod;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

// Split a product of distinct linear factors over F_p^2 into roots.
void split_linear(const PolyFp2& f, std::mt19937_64& rng, std::vector<Fp2>& out) {
    const u64 p = f.modulus();
    if (f.degree() == 0) return;
    if (f.degree() == 1) {
        out.push_back(-(f.coeff(0) / f.coeff(1)));
        return;
    }
    mpz_class half = (mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) - 1) / 2;
    for (;;) {
        Fp2 c(Fp(rng() % p, p), Fp(rng() % p, p));
        PolyFp2 probe = PolyFp2::x_minus(-c);  // x + c
        PolyFp2 g = powmod_poly(probe, half, f) -
                    PolyFp2({Fp2::from_base(Fp(1, p))}, p);
        PolyFp2 d = gcd(g, f);
        if (d.degree() > 0 && d.degree() < f.degree()) {
            split_linear(d, rng, out);
            split_linear(f.divmod(d).first, rng, out);
            return;
        }
    }
}

}  // namespace

int root_multiplicity(const PolyFp2& f, const Fp2& r) {
    PolyFp2 lin = PolyFp2::x_minus(r);
    PolyFp2 g = f;
    int m = 0;
    for (;;) {
        auto [q, rem] = g.divmod(lin);
        if (!rem.is_zero()) return m;
        ++m;
        g = q;
        if (g.degree() < 0) return m;
    }
}

std::vector<std::pair<Fp2, int>> roots_in_fp2(const PolyFp& f, std::uint64_t seed) {
    if (f.is_zero()) throw invalid_input("roots_in_fp2: zero polynomial");
    const u64 p = f.modulus();
    PolyFp2 g = PolyFp2::lift(f.monic());
    // gcd with x^(p^2) - x picks out the F_p^2-rational part.
    mpz_class p2 = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
    PolyFp2 x({Fp2::from_base(Fp(0, p)), Fp2::from_base(Fp(1, p))}, p);
    PolyFp2 xq = powmod_poly(x, p2, g);
    PolyFp2 rad = gcd(xq - x, g);
    // squarefree product of linear factors over F_p^2
    std::mt19937_64 rng(seed);
    std::vector<Fp2> roots;
    split_linear(rad.monic(), rng, roots);
    std::sort(roots.begin(), roots.end());
    std::vector<std::pair<Fp2, int>> out;
    out.reserve(roots.size());
    for (const Fp2& r : roots) out.emplace_back(r, root_multiplicity(g, r));
    return out;
}

std::vector<std::vector<BigInt>> primitive_integer_kernel(
    const std::vector<std::vector<BigRat>>& M) {
    if (M.empty()) return {};
    const std::size_t rows = M.size(), cols = M[0].size();
    for (const auto& r : M)
        if (r.size() != cols) throw invalid_input("primitive_integer_kernel: ragged matrix");
    // Clear row denominators so we can run Bareiss over integers.
    std::vector<std::vector<BigInt>> A(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt lcm = 1;
        for (const auto& x : M[i]) {
            BigInt den = x.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            BigRat v = M[i][j] * BigRat(lcm);
            v.canonicalize();
            A[i][j] = v.get_num();
        }
    }
    // Bareiss fraction-free elimination; pivot = first row with nonzero entry.
    std::vector<std::size_t> pivot_col;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && A[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(A[r], A[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) / prev;
            A[i][c] = 0;
        }
        prev = A[r][c];
        pivot_col.push_back(c);
        ++r;
    }
    const std::size_t rank = pivot_col.size();
    // Back-substitute for each free column.
    std::vector<std::vector<BigInt>> basis;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pi < rank && pivot_col[pi] == c) { ++pi; continue; }
        std::vector<BigRat> v(cols, BigRat(0));
        v[c] = 1;
        for (std::size_t i = rank; i-- > 0;) {
            std::size_t pc = pivot_col[i];
            BigRat s(0);
            for (std::size_t j = pc + 1; j < cols; ++j) s += BigRat(A[i][j]) * v[j];
            v[pc] = -s / BigRat(A[i][pc]);
            v[pc].canonicalize();
        }
        // scale to primitive integers
        BigInt lcm = 1;
        for (auto& x : v) {
            x.canonicalize();
            BigInt den = x.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<BigInt> w(cols);
        BigInt g = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            BigRat x = v[j] * BigRat(lcm);
            x.canonicalize();
            w[j] = x.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
        }
        if (g > 1)
            for (auto& x : w) x /= g;
        for (const auto& x : w) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : w) y = -y;
                break;
            }
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace ssz
