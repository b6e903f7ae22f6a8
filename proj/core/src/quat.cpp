#include "ssz/quat.hpp"

#include <algorithm>
#include <sstream>

namespace ssz {

namespace {

std::vector<std::vector<BigInt>> make_phi(int ell) {
    const int d = ell + 2;
    std::vector<std::vector<BigInt>> c(d, std::vector<BigInt>(d, BigInt(0)));
    auto set = [&](int a, int b, const char* v) {
        c[a][b] = BigInt(v);
        c[b][a] = BigInt(v);
    };
    if (ell == 2) {
        set(3, 0, "1");
        set(2, 2, "-1");
        set(2, 1, "1488");
        set(2, 0, "-162000");
        set(1, 1, "40773375");
        set(1, 0, "8748000000");
        set(0, 0, "-157464000000000");
    } else {
        set(4, 0, "1");
        set(3, 3, "-1");
        set(3, 2, "2232");
        set(3, 1, "-1069956");
        set(3, 0, "36864000");
        set(2, 2, "2587918086");
        set(2, 1, "8900222976000");
        set(2, 0, "452984832000000");
        set(1, 1, "-770845966336000000");
        set(1, 0, "1855425871872000000000");
    }
    return c;
}

}  // namespace

const std::vector<std::vector<BigInt>>& modular_polynomial(int ell) {
    static const std::vector<std::vector<BigInt>> phi2 = make_phi(2);
    static const std::vector<std::vector<BigInt>> phi3 = make_phi(3);
    if (ell == 2) return phi2;
    if (ell == 3) return phi3;
    throw unsupported_index("modular_polynomial: only ell = 2, 3 are embedded");
}

std::vector<BigInt> BrandtMatrix::transpose_apply(const std::vector<BigInt>& v) const {
    if (v.size() != n()) throw invalid_input("transpose_apply: length mismatch");
    std::vector<BigInt> out(n(), BigInt(0));
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = 0; j < n(); ++j) out[j] += entries[i][j] * v[i];
    return out;
}

BrandtMatrix BrandtMatrix::operator*(const BrandtMatrix& o) const {
    if (n() != o.n()) throw invalid_input("BrandtMatrix: size mismatch");
    BrandtMatrix r;
    r.p = p;
    r.m = m * o.m;
    r.entries.assign(n(), std::vector<std::int64_t>(n(), 0));
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t k = 0; k < n(); ++k) {
            if (entries[i][k] == 0) continue;
            for (std::size_t j = 0; j < n(); ++j)
                r.entries[i][j] += entries[i][k] * o.entries[k][j];
        }
    return r;
}

namespace {

void check_brandt_invariants(const SsLocus& locus, const BrandtMatrix& B,
                             std::int64_t expected_row_sum) {
    const std::size_t n = B.n();
    if (n != locus.n()) throw internal_consistency_error("Brandt size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (B.entries[i].size() != n) throw internal_consistency_error("Brandt row size mismatch");
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (B.entries[i][j] < 0)
                throw internal_consistency_error("Brandt entry negative");
            s += B.entries[i][j];
        }
        if (s != expected_row_sum)
            throw internal_consistency_error("Brandt row sum violated");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (locus.cls(j).weight * B.entries[i][j] != locus.cls(i).weight * B.entries[j][i])
                throw internal_consistency_error("Brandt weight symmetry violated");
            std::size_t ic = locus.cls(i).conj, jc = locus.cls(j).conj;
            if (B.entries[i][j] != B.entries[ic][jc])
                throw internal_consistency_error("Brandt conjugation symmetry violated");
        }
}

}  // namespace

void validate_brandt(const SsLocus& locus, const BrandtMatrix& B, std::int64_t expected_row_sum) {
    check_brandt_invariants(locus, B, expected_row_sum);
}

BrandtMatrix brandt_prime(const SsLocus& locus, int ell) {
    if (ell != 2 && ell != 3) throw unsupported_index("brandt_prime: ell must be 2 or 3");
    if (static_cast<std::uint64_t>(ell) == locus.p())
        throw invalid_input("brandt_prime: ell = p");
    const std::uint64_t p = locus.p();
    const auto& phi = modular_polynomial(ell);
    const std::size_t n = locus.n();
    BrandtMatrix B;
    B.p = p;
    B.m = static_cast<std::uint64_t>(ell);
    B.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        // Phi_ell(j_i, X) as a polynomial in X over F_p^2
        const Fp2 ji = locus.cls(i).j;
        std::vector<Fp2> pc(static_cast<std::size_t>(ell) + 2, Fp2::from_base(Fp(0, p)));
        for (int b = 0; b <= ell + 1; ++b) {
            Fp2 acc = Fp2::from_base(Fp(0, p));
            // Horner in j_i over the a-index
            for (int a = ell + 1; a >= 0; --a)
                acc = acc * ji + Fp2::from_base(Fp::from_int(phi[a][b], p));
            pc[static_cast<std::size_t>(b)] = acc;
        }
        PolyFp2 f(std::move(pc), p);
        if (f.degree() != ell + 1)
            throw internal_consistency_error("brandt_prime: Phi_ell(j_i, X) degree drop");
        std::int64_t total = 0;
        for (std::size_t j = 0; j < n; ++j) {
            int mult = root_multiplicity(f, locus.cls(j).j);
            B.entries[i][j] = mult;
            total += mult;
        }
        if (total != ell + 1)
            throw internal_consistency_error(
                "brandt_prime: roots of Phi_ell(j_i, X) escape the supersingular locus");
    }
    check_brandt_invariants(locus, B, ell + 1);
    // commutation with B(p)
    BrandtMatrix Bp = brandt_p(locus);
    if (!((B * Bp) == (Bp * B)))
        throw internal_consistency_error("brandt_prime: B(ell) does not commute with B(p)");
    return B;
}

BrandtMatrix brandt_p(const SsLocus& locus) {
    const std::size_t n = locus.n();
    BrandtMatrix B;
    B.p = locus.p();
    B.m = locus.p();
    B.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) B.entries[i][locus.cls(i).conj] = 1;
    return B;
}

BrandtCache::BrandtCache(const SsLocus& loc)
    : locus(&loc), b2(brandt_prime(loc, 2)), b3(brandt_prime(loc, 3)), bp(brandt_p(loc)) {}

BrandtCache::BrandtCache(const SsLocus& loc, BrandtMatrix m2, BrandtMatrix m3, BrandtMatrix mp)
    : locus(&loc), b2(std::move(m2)), b3(std::move(m3)), bp(std::move(mp)) {}

namespace {

BrandtMatrix identity_matrix(const SsLocus& locus) {
    BrandtMatrix I;
    I.p = locus.p();
    I.m = 1;
    I.entries.assign(locus.n(), std::vector<std::int64_t>(locus.n(), 0));
    for (std::size_t i = 0; i < locus.n(); ++i) I.entries[i][i] = 1;
    return I;
}

BrandtMatrix prime_power(const BrandtMatrix& Bl, std::int64_t ell, int e, const SsLocus& locus) {
    // B(ell^(r+1)) = B(ell) B(ell^r) - ell B(ell^(r-1))
    BrandtMatrix prev = identity_matrix(locus);
    BrandtMatrix cur = Bl;
    for (int r = 1; r < e; ++r) {
        BrandtMatrix next = Bl * cur;
        for (std::size_t i = 0; i < next.n(); ++i)
            for (std::size_t j = 0; j < next.n(); ++j)
                next.entries[i][j] -= ell * prev.entries[i][j];
        prev = cur;
        cur = next;
    }
    cur.m = 1;
    for (int r = 0; r < e; ++r) cur.m *= static_cast<std::uint64_t>(ell);
    return cur;
}

}  // namespace

BrandtMatrix hecke(std::uint64_t m, const BrandtCache& cache) {
    if (m == 0) throw invalid_input("hecke: m must be positive");
    const SsLocus& locus = *cache.locus;
    std::uint64_t rest = m;
    BrandtMatrix out = identity_matrix(locus);
    auto absorb = [&](const BrandtMatrix& Bl, std::uint64_t ell) {
        int e = 0;
        while (rest % ell == 0) { rest /= ell; ++e; }
        if (e == 0) return;
        if (ell == cache.locus->p()) {
            // B(p^r) = B(p)^r
            BrandtMatrix P = Bl;
            for (int r = 1; r < e; ++r) P = P * Bl;
            out = out * P;
        } else {
            out = out * prime_power(Bl, static_cast<std::int64_t>(ell), e, locus);
        }
    };
    absorb(cache.b2, 2);
    absorb(cache.b3, 3);
    absorb(cache.bp, locus.p());
    if (rest != 1) {
        std::ostringstream os;
        os << "hecke: index " << m << " has an unsupported prime factor";
        throw unsupported_index(os.str());
    }
    out.m = m;
    return out;
}

BigRat pairing(const SsLocus& locus, const std::vector<BigRat>& u, const std::vector<BigRat>& v) {
    if (u.size() != locus.n() || v.size() != locus.n())
        throw invalid_input("pairing: length mismatch");
    BigRat s(0);
    for (std::size_t i = 0; i < locus.n(); ++i) s += BigRat(locus.cls(i).weight) * u[i] * v[i];
    s.canonicalize();
    return s;
}

BigInt pairing(const SsLocus& locus, const std::vector<BigInt>& u, const std::vector<BigInt>& v) {
    if (u.size() != locus.n() || v.size() != locus.n())
        throw invalid_input("pairing: length mismatch");
    BigInt s(0);
    for (std::size_t i = 0; i < locus.n(); ++i) s += locus.cls(i).weight * u[i] * v[i];
    return s;
}

Eigenform extract_eigenform(const BrandtCache& cache, const CurveQ& E) {
    const SsLocus& locus = *cache.locus;
    const std::uint64_t p = locus.p();
    if (E.conductor() != p) throw invalid_input("extract_eigenform: conductor != locus prime");
    const std::size_t n = locus.n();
    const std::int64_t a2 = ap(E, 2), a3 = ap(E, 3), app = ap(E, p);

    // stacked system: (B(l)^T - a_l I) v = 0 for l = 2, 3, p
    std::vector<std::vector<BigRat>> M;
    auto stack = [&](const BrandtMatrix& B, std::int64_t a) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<BigRat> row(n, BigRat(0));
            for (std::size_t i = 0; i < n; ++i) row[i] = BigRat(B.entries[i][j]);
            row[j] -= BigRat(static_cast<long>(a));
            M.push_back(std::move(row));
        }
    };
    stack(cache.b2, a2);
    stack(cache.b3, a3);
    stack(cache.bp, app);
    auto kernel = primitive_integer_kernel(M);
    if (kernel.empty())
        throw eigenform_not_found("extract_eigenform: no joint eigenvector for curve " + E.label());
    if (kernel.size() > 1)
        throw insufficient_operators(
            "extract_eigenform: joint eigenspace of B(2), B(3), B(p) not 1-dimensional for " +
            E.label());

    Eigenform f;
    f.p = p;
    f.curve_label = E.label();
    f.v = kernel[0];
    // normalization invariants are guaranteed by primitive_integer_kernel;
    // verify the eigenvector property for all supported m <= 20
    auto an = an_series(E, 20);
    for (std::uint64_t m = 1; m <= 20; ++m) {
        std::uint64_t rest = m;
        for (std::uint64_t q : {std::uint64_t{2}, std::uint64_t{3}, p})
            while (rest % q == 0) rest /= q;
        if (rest != 1) continue;
        BrandtMatrix Bm = hecke(m, cache);
        std::vector<BigInt> w = Bm.transpose_apply(f.v);
        std::int64_t am = an[m - 1];
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] != am * f.v[i])
                throw internal_consistency_error(
                    "extract_eigenform: B(m)^T v != a_m v verification failed");
        f.eigenvalues[m] = am;
    }
    // cuspidal vectors pair to zero with the Eisenstein direction sum e_i/w_i
    BigInt s(0);
    for (const auto& x : f.v) s += x;
    if (s != 0)
        throw internal_consistency_error("extract_eigenform: entries do not sum to zero");
    return f;
}

DivisorVector b_divisor(const SsLocus& locus, int D) {
    const auto& table = cm_seed_table();
    auto it = std::find_if(table.begin(), table.end(), [&](const CMSeed& s) { return s.D == D; });
    if (it == table.end())
        throw invalid_input("b_divisor: unsupported discriminant (class number > 1?)");
    auto idx = cm_seed_class(locus, D);
    if (!idx) throw invalid_input("b_divisor: p is not inert at -D");
    DivisorVector b;
    b.coeffs.assign(locus.n(), BigRat(0));
    b.coeffs[*idx] = BigRat(2, it->units);
    b.coeffs[*idx].canonicalize();
    return b;
}

ParityReport parity_checks(const SsLocus& locus, const BrandtMatrix& Bl,
                           const Eigenform* eigenform, int a_p) {
    ParityReport rep;
    const std::uint64_t p = locus.p();
    std::uint64_t ell = Bl.m;
    rep.evenness_applicable =
        is_prime(ell) && ell % 2 == 1 && ell != p &&
        legendre(-BigInt(static_cast<unsigned long>(p)), ell) == -1;
    if (rep.evenness_applicable) {
        for (std::size_t i : locus.s_p())
            for (std::size_t j : locus.s_p())
                if (Bl.entries[i][j] % 2 != 0) {
                    rep.evenness_pass = false;
                    std::ostringstream os;
                    os << "B_" << i << "," << j << "(" << ell << ") odd";
                    rep.failures.push_back(os.str());
                }
    }
    for (std::size_t i = 0; i < locus.n(); ++i)
        for (std::size_t j = 0; j < locus.n(); ++j)
            if (Bl.entries[i][j] != Bl.entries[locus.cls(i).conj][locus.cls(j).conj]) {
                rep.conjugation_pass = false;
                rep.failures.push_back("conjugation symmetry violated");
            }
    if (eigenform) {
        for (std::size_t j = 0; j < locus.n(); ++j)
            if (eigenform->v[j] != a_p * eigenform->v[locus.cls(j).conj]) {
                rep.eigen_conj_pass = false;
                rep.failures.push_back("v(e_j) != a_p v(e_conj(j))");
            }
    }
    return rep;
}

}  // namespace ssz
