#include "ssz/ssloc.hpp"

#include <algorithm>
#include <numeric>

#include "ssz/qseries.hpp"

namespace ssz {

SsLocus::SsLocus(std::uint64_t p) : p_(p) {
    PolyFp ss = supersingular_poly(p);
    auto roots = roots_in_fp2(ss);
    // supersingular polynomial is squarefree; every root has multiplicity 1
    for (const auto& [r, mult] : roots) {
        if (mult != 1) throw std::runtime_error("SsLocus: supersingular polynomial not squarefree");
    }
    std::vector<Fp2> rational, quadratic;
    for (const auto& [r, mult] : roots)
        (r.in_base_field() ? rational : quadratic).push_back(r);
    std::sort(rational.begin(), rational.end());
    std::sort(quadratic.begin(), quadratic.end());

    const Fp2 j0 = Fp2::from_base(Fp(0, p));
    const Fp2 j1728 = Fp2::from_base(Fp::from_int(std::int64_t{1728}, p));
    auto weight_of = [&](const Fp2& j) {
        if (j == j0 && p % 3 == 2) return 3;
        if (j == j1728 && p % 4 == 3) return 2;
        return 1;
    };

    for (const Fp2& j : rational) {
        SsClass c;
        c.index = classes_.size();
        c.j = j;
        c.weight = weight_of(j);
        c.conj = c.index;
        sp_.push_back(c.index);
        classes_.push_back(c);
    }
    for (const Fp2& j : quadratic) {
        SsClass c;
        c.index = classes_.size();
        c.j = j;
        c.weight = weight_of(j);
        classes_.push_back(c);
    }
    // Frobenius pairing among the non-rational classes
    for (std::size_t i = rational.size(); i < classes_.size(); ++i) {
        Fp2 fj = classes_[i].j.frobenius();
        bool matched = false;
        for (std::size_t k = rational.size(); k < classes_.size(); ++k) {
            if (classes_[k].j == fj) {
                classes_[i].conj = k;
                matched = true;
                break;
            }
        }
        if (!matched) throw std::runtime_error("SsLocus: Frobenius conjugate missing from locus");
    }
    // invariant checks: involution, mass formula
    for (const auto& c : classes_) {
        if (classes_[c.conj].conj != c.index)
            throw std::runtime_error("SsLocus: conj is not an involution");
    }
    BigRat expected_mass(static_cast<long>(p - 1), 12);
    expected_mass.canonicalize();
    if (mass() != expected_mass)
        throw std::runtime_error("SsLocus: Eichler mass formula violated");
}

SsLocus::SsLocus(std::uint64_t p, std::vector<SsClass> classes)
    : p_(p), classes_(std::move(classes)) {
    if (p < 11 || !is_prime(p)) throw invalid_input("SsLocus: p must be a prime >= 11");
    const Fp2 j0 = Fp2::from_base(Fp(0, p));
    const Fp2 j1728 = Fp2::from_base(Fp::from_int(std::int64_t{1728}, p));
    bool seen_quadratic = false;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const SsClass& c = classes_[i];
        if (c.index != i) throw invalid_input("SsLocus: class index mismatch");
        if (c.j.modulus() != p) throw invalid_input("SsLocus: class modulus mismatch");
        int w = 1;
        if (c.j == j0 && p % 3 == 2) w = 3;
        else if (c.j == j1728 && p % 4 == 3) w = 2;
        if (c.weight != w) throw invalid_input("SsLocus: weight rule violated");
        if (c.conj >= classes_.size() || classes_[c.conj].j != c.j.frobenius() ||
            classes_[c.conj].conj != i)
            throw invalid_input("SsLocus: Frobenius involution inconsistent");
        if (c.j.in_base_field()) {
            if (seen_quadratic) throw invalid_input("SsLocus: canonical order violated");
            if (i > 0 && !(classes_[i - 1].j < c.j))
                throw invalid_input("SsLocus: canonical order violated");
            sp_.push_back(i);
        } else {
            if (seen_quadratic && !(classes_[i - 1].j < c.j))
                throw invalid_input("SsLocus: canonical order violated");
            seen_quadratic = true;
        }
    }
    BigRat expected_mass(static_cast<long>(p - 1), 12);
    expected_mass.canonicalize();
    if (mass() != expected_mass) throw invalid_input("SsLocus: Eichler mass formula violated");
}

BigRat SsLocus::mass() const {
    BigRat m(0);
    for (const auto& c : classes_) m += BigRat(1, c.weight);
    m.canonicalize();
    return m;
}

int class_number(std::uint64_t D) {
    if (D == 0 || D % 4 == 1 || D % 4 == 2)
        throw invalid_input("class_number: -D must be 0 or 1 mod 4");
    // reduced primitive forms (a,b,c), b^2 - 4ac = -D, |b| <= a <= c,
    // b >= 0 when |b| = a or a = c
    int h = 0;
    for (std::int64_t a = 1; a * a * 3 <= static_cast<std::int64_t>(D); ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t num = b * b + static_cast<std::int64_t>(D);
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (b == -a || a == c)) continue;
            std::int64_t g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
            if (g != 1) continue;
            ++h;
        }
    }
    return h;
}

int s_p_formula(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw invalid_input("s_p_formula: p must be a prime >= 5");
    if (p % 4 == 1) return class_number(4 * p) / 2;
    int h = class_number(p);
    return p % 8 == 3 ? 2 * h : h;
}

const std::vector<CMSeed>& cm_seed_table() {
    static const std::vector<CMSeed> table = {
        {3, BigInt(0), 3},
        {4, BigInt(1728), 2},
        {7, BigInt(-3375), 1},
        {8, BigInt(8000), 1},
        {11, BigInt(-32768), 1},
        {19, BigInt("-884736"), 1},
        {43, BigInt("-884736000"), 1},
        {67, BigInt("-147197952000"), 1},
        {163, BigInt("-262537412640768000"), 1},
    };
    return table;
}

std::optional<std::size_t> cm_seed_class(const SsLocus& locus, int D) {
    const auto& table = cm_seed_table();
    auto it = std::find_if(table.begin(), table.end(), [&](const CMSeed& s) { return s.D == D; });
    if (it == table.end()) throw invalid_input("cm_seed_class: D not in the class-number-one table");
    const std::uint64_t p = locus.p();
    if (legendre(-BigInt(it->D), p) != -1) return std::nullopt;
    Fp2 jD = Fp2::from_base(Fp::from_int(it->j, p));
    for (const auto& c : locus.classes())
        if (c.j == jD) return c.index;
    throw std::runtime_error("cm_seed_class: inert CM j-invariant not supersingular (bug)");
}

}  // namespace ssz
