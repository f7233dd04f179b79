#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "nsgp/gluing.hpp"
#include "nsgp/tangent_cone.hpp"

namespace nsgp {

// ---- Arithmetic sequences ---------------------------------------------------

struct ArithmeticFamily {
    NumericalSemigroup H;
    long a1 = 0, d = 0;
    int n = 0;
    long a = 0, b = 0;               // a1 = a(n-1) + b, 1 <= b <= n-1
    std::vector<Poly> predicted_toric;   // Patil generators of I_H
    std::vector<Poly> predicted_initial; // the same with tails dropped: I_H*
};

/// H = <a1, a1+d, ..., a1+(n-1)d> with the Patil generating sets of I_H and
/// I_H*, which are also the reduced degrevlex(x1>...>xn) Groebner basis of
/// the latter.
inline ArithmeticFamily arithmetic_semigroup(long a1, long d, int n,
                                             uint32_t p = kDefaultPrime) {
    if (n < 3 || a1 < n || d < 1 || std::gcd(a1, d) != 1)
        throw invalid_input("arithmetic_semigroup: need gcd(a1,d)=1, d>=1, 3<=n<=a1");
    std::vector<long> gens;
    for (int i = 0; i < n; ++i) gens.push_back(a1 + i * d);
    ArithmeticFamily fam{NumericalSemigroup::from_generators(gens)};
    fam.a1 = a1;
    fam.d = d;
    fam.n = n;
    if (fam.H.embdim() != n)
        throw invalid_input("arithmetic_semigroup: sequence is not a minimal generating set");
    fam.b = ((a1 - 1) % (n - 1)) + 1;
    fam.a = (a1 - fam.b) / (n - 1);
    auto var = [&](int i, int e = 1) { return Monomial::var(i - 1, n, e); };
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
            Poly f = Poly::from_terms(
                n, {{Fp::one(p), var(i) * var(j + 1)}, {-Fp::one(p), var(i + 1) * var(j)}});
            fam.predicted_toric.push_back(f);
            fam.predicted_initial.push_back(f);
        }
    for (long i = 1; i <= n - fam.b; ++i) {
        Monomial head = var(n, static_cast<int>(fam.a)) * var(static_cast<int>(fam.b + i));
        Monomial tail = var(1, static_cast<int>(fam.a + d)) * var(static_cast<int>(i));
        fam.predicted_toric.push_back(
            Poly::from_terms(n, {{Fp::one(p), head}, {-Fp::one(p), tail}}));
        fam.predicted_initial.push_back(Poly::monomial(n, Fp::one(p), head));
    }
    return fam;
}

/// Closed form: Koszul (and G-quadratic) iff n <= a1 <= 2n-2.
inline bool classify_arithmetic(long a1, long d, int n) {
    if (n < 3 || a1 < n || d < 1 || std::gcd(a1, d) != 1)
        throw invalid_input("classify_arithmetic: illegal parameters");
    return a1 <= 2 * n - 2;
}

// ---- Compound semigroups ------------------------------------------------------

struct CompoundFamily {
    NumericalSemigroup H;
    std::vector<long> gens_ordered;      // q_1 .. q_{n+1}
    std::vector<Poly> predicted_toric;   // x_i^{b_i} - x_{i+1}^{a_i}
    std::vector<Poly> predicted_initial; // x_2^{a_1}, ..., x_{n+1}^{a_n}
    bool quadratic_predicted = false;    // all a_i = 2
};

inline CompoundFamily compound_semigroup(const std::vector<long>& a,
                                         const std::vector<long>& b,
                                         uint32_t p = kDefaultPrime) {
    size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw invalid_input("compound_semigroup: parameter lists must match and be nonempty");
    for (size_t i = 0; i < n; ++i) {
        if (a[i] < 2 || a[i] >= b[i])
            throw invalid_input("compound_semigroup: need 2 <= a_i < b_i");
        long tail = 1;
        for (size_t j = i; j < n; ++j) tail *= b[j];
        if (std::gcd(a[i], tail) != 1)
            throw invalid_input("compound_semigroup: gcd(a_i, b_i..b_n) must be 1");
    }
    std::vector<long> q(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        long v = 1;
        for (size_t j = 0; j < i; ++j) v *= b[j];
        for (size_t j = i; j < n; ++j) v *= a[j];
        q[i] = v;
    }
    CompoundFamily fam{NumericalSemigroup::from_generators(q)};
    fam.gens_ordered = q;
    int nv = static_cast<int>(n) + 1;
    if (fam.H.embdim() != nv)
        throw invalid_input("compound_semigroup: generators are not minimal");
    for (size_t i = 0; i < n; ++i) {
        Monomial head = Monomial::var(static_cast<int>(i), nv, static_cast<int>(b[i]));
        Monomial tail = Monomial::var(static_cast<int>(i) + 1, nv, static_cast<int>(a[i]));
        fam.predicted_toric.push_back(
            Poly::from_terms(nv, {{Fp::one(p), head}, {-Fp::one(p), tail}}));
        fam.predicted_initial.push_back(Poly::monomial(nv, Fp::one(p), tail));
    }
    fam.quadratic_predicted = true;
    for (long ai : a)
        if (ai != 2) fam.quadratic_predicted = false;
    return fam;
}

// ---- Watanabe semigroups W_n(a) ----------------------------------------------

/// W_n(a) = <2^n, 2^n + a, 2^n + 2a, ..., 2^n + 2^{n-1} a>, a odd.
inline NumericalSemigroup watanabe(int n, long a) {
    if (n < 1 || a < 1 || a % 2 == 0)
        throw invalid_input("watanabe: need n >= 1 and odd a >= 1");
    std::vector<long> gens{1L << n};
    for (int i = 0; i < n; ++i) gens.push_back((1L << n) + (1L << i) * a);
    return NumericalSemigroup::from_generators(gens);
}

// ---- Coprime-product semigroups ------------------------------------------------

struct CoprimeProductFamily {
    NumericalSemigroup H;
    std::vector<long> gens_ordered;      // P/a_1, ..., P/a_n for a sorted descending
    std::vector<Poly> predicted_initial; // x_2^{a_2}, ..., x_n^{a_n}
};

/// H = <P/a_1, ..., P/a_n> for pairwise coprime a_i, P = prod a_i. Always a
/// complete intersection and never quadratic (for n > 2).
inline CoprimeProductFamily coprime_product_semigroup(std::vector<long> a,
                                                      uint32_t p = kDefaultPrime) {
    if (a.size() < 3) throw invalid_input("coprime_product_semigroup: need n > 2");
    for (long v : a)
        if (v < 2) throw invalid_input("coprime_product_semigroup: entries must exceed 1");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (std::gcd(a[i], a[j]) != 1)
                throw not_coprime("coprime_product_semigroup: entries must be pairwise coprime");
    std::sort(a.begin(), a.end(), std::greater<long>());
    long P = 1;
    for (long v : a) P *= v;
    std::vector<long> gens;
    for (long v : a) gens.push_back(P / v);
    CoprimeProductFamily fam{NumericalSemigroup::from_generators(gens)};
    fam.gens_ordered = gens;
    int n = static_cast<int>(a.size());
    for (int i = 1; i < n; ++i)
        fam.predicted_initial.push_back(Poly::monomial(
            n, Fp::one(p), Monomial::var(i, n, static_cast<int>(a[i]))));
    return fam;
}

// ---- Embedding dimension 3 ------------------------------------------------------

struct ThreeSemigroupVerdict {
    bool koszul = false; // = quadratic for embdim 3
    std::optional<std::pair<long, long>> normal_form; // (a, c) with G(H) = {4, 2c, 2a+c}
};

/// Closed form for embdim 3: quadratic iff e = 3, or e = 4 and
/// G(H) = {4, 2c, 2a+c} with c > 1 odd and a >= 1.
inline ThreeSemigroupVerdict classify_3_semigroup(const NumericalSemigroup& H) {
    if (H.embdim() != 3) throw invalid_input("classify_3_semigroup: embdim must be 3");
    ThreeSemigroupVerdict v;
    long e = H.multiplicity();
    if (e == 3) {
        v.koszul = true;
        return v;
    }
    if (e != 4) return v;
    const auto& g = H.generators(); // {4, g1, g2}
    long odd = 0, twice_odd = 0;
    for (size_t i = 1; i < g.size(); ++i) {
        if (g[i] % 2 == 1) odd = g[i];
        else if (g[i] % 4 == 2) twice_odd = g[i];
    }
    if (odd == 0 || twice_odd == 0) return v;
    long c = twice_odd / 2;
    if (c <= 1 || c % 2 == 0) return v;
    if ((odd - c) % 2 != 0) return v;
    long a = (odd - c) / 2;
    if (a < 1) return v;
    v.koszul = true;
    v.normal_form = {{a, c}};
    return v;
}

// ---- Special almost complete intersections ----------------------------------------

struct SpecialACIResult {
    bool is_special_aci = false;
    std::vector<Poly> fs; // f_i = x_i^{c_i} - m_i when detected
};

/// H is a special almost complete intersection when I_H is generated by the
/// n binomials x_i^{c_i} - m_i from the critical exponents, with no m_i a
/// pure power.
inline SpecialACIResult special_aci_detect(const NumericalSemigroup& H,
                                           uint32_t p = kDefaultPrime) {
    if (H.embdim() < 3) throw invalid_input("special_aci_detect: embdim must be >= 3");
    SpecialACIResult r;
    CriticalExponents ce = critical_exponents(H);
    for (const Monomial& m : ce.witness) {
        int support = 0;
        for (int i = 0; i < m.nvars(); ++i)
            if (m.e[i] > 0) ++support;
        if (support < 2) return r; // pure-power witness: not special
    }
    std::vector<Poly> fs = critical_binomials(H, p);
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j)
            if (fs[i] == fs[j]) return r;
    IdealPresentation I = toric_ideal(H, p);
    IdealPresentation F(H.embdim(), p, fs);
    if (!F.equals(I)) return r;
    r.is_special_aci = true;
    r.fs = std::move(fs);
    return r;
}

struct SpecialACILaw {
    bool gb_quadratic = false;   // degrevlex(x_n > ... > x_1) reduced GB of I* all quadrics
    bool e_at_bound = false;     // e(H) = 2^{n-1} - 2^{n-3}
};

/// For quadratic special-ACI semigroups: the degrevlex Groebner basis of I*
/// is quadratic iff e(H) = 2^{n-1} - 2^{n-3}. Both sides are computed
/// independently and the equivalence is asserted.
inline SpecialACILaw special_aci_multiplicity_law(const NumericalSemigroup& H,
                                                  uint32_t p = kDefaultPrime) {
    if (!special_aci_detect(H, p).is_special_aci)
        throw hypothesis_failed("special_aci_multiplicity_law: H is not special almost CI");
    IdealPresentation Istar = tangent_cone_ideal(H, p);
    if (!is_quadratic(H, &Istar, p).quadratic)
        throw hypothesis_failed("special_aci_multiplicity_law: H is not quadratic");
    int n = H.embdim();
    SpecialACILaw law;
    std::vector<int> perm;
    for (int i = n - 1; i >= 0; --i) perm.push_back(i); // x_n > ... > x_1
    TermOrder ord = TermOrder::with_perm(n, perm, OrderKind::DegRevLex);
    law.gb_quadratic = true;
    for (auto& g : Istar.groebner_basis(ord))
        if (g.degree() > 2) law.gb_quadratic = false;
    law.e_at_bound = H.multiplicity() == (1L << (n - 1)) - (1L << (n - 3));
    if (law.gb_quadratic != law.e_at_bound)
        throw error("special_aci_multiplicity_law: equivalence violated");
    return law;
}

// ---- Symmetric 4-generated semigroups (Bresinsky) -----------------------------------

struct BresinskyParams {
    // alpha_{ij} for ij in {21, 31, 32, 42, 13, 43, 14, 24}; the c_i are derived:
    // c_1 = a21+a31, c_2 = a32+a42, c_3 = a13+a43, c_4 = a14+a24.
    long a21, a31, a32, a42, a13, a43, a14, a24;
};

struct Symmetric4Family {
    NumericalSemigroup H;
    std::vector<long> gens_ordered; // a_1..a_4 by the theorem's formulas
    std::vector<Poly> f;            // f_1..f_5 generating I_H
};

inline Symmetric4Family bresinsky_symmetric(const BresinskyParams& q,
                                            uint32_t p = kDefaultPrime) {
    long c1 = q.a21 + q.a31, c2 = q.a32 + q.a42, c3 = q.a13 + q.a43, c4 = q.a14 + q.a24;
    auto in_range = [](long a, long c) { return 0 < a && a < c; };
    // alpha_{ij} is the exponent of x_j in a tail monomial; it must stay
    // below c_j so the tails are standard with respect to the pure powers.
    if (!in_range(q.a21, c1) || !in_range(q.a31, c1) || !in_range(q.a32, c2) ||
        !in_range(q.a42, c2) || !in_range(q.a13, c3) || !in_range(q.a43, c3) ||
        !in_range(q.a14, c4) || !in_range(q.a24, c4))
        throw invalid_input("bresinsky_symmetric: alpha_{ij} out of range");
    long a1 = c2 * c3 * q.a14 + q.a32 * q.a13 * q.a24;
    long a2 = c3 * c4 * q.a21 + q.a31 * q.a43 * q.a24;
    long a3 = c1 * c4 * q.a32 + q.a14 * q.a42 * q.a31;
    long a4 = c1 * c2 * q.a43 + q.a42 * q.a21 * q.a13;
    long g = std::gcd(std::gcd(a1, a2), std::gcd(a3, a4));
    if (g != 1) throw invalid_input("bresinsky_symmetric: generators not coprime");
    Symmetric4Family fam{NumericalSemigroup::from_generators({a1, a2, a3, a4})};
    fam.gens_ordered = {a1, a2, a3, a4};
    if (fam.H.embdim() != 4)
        throw invalid_input("bresinsky_symmetric: generators are not minimal");
    auto mono = [&](std::initializer_list<std::pair<int, long>> factors) {
        Monomial m(4);
        for (auto& [var, e] : factors) m.e[var - 1] += static_cast<int>(e);
        return m;
    };
    auto bin = [&](Monomial head, Monomial tail) {
        return Poly::from_terms(4, {{Fp::one(p), head}, {-Fp::one(p), tail}});
    };
    fam.f = {
        bin(mono({{1, c1}}), mono({{3, q.a13}, {4, q.a14}})),
        bin(mono({{2, c2}}), mono({{1, q.a21}, {4, q.a24}})),
        bin(mono({{3, c3}}), mono({{1, q.a31}, {2, q.a32}})),
        bin(mono({{4, c4}}), mono({{2, q.a42}, {3, q.a43}})),
        bin(mono({{3, q.a43}, {1, q.a21}}), mono({{2, q.a32}, {4, q.a14}})),
    };
    return fam;
}

struct Symmetric4Verdict {
    bool quadratic = false; // = Koszul = (e = 5)
    std::optional<std::pair<long, long>> ab; // G(H) = {5, 4a+b, 2a+3b, 3a+2b}
    int initial_branch = 0; // 1: a,b != 1; 2: a = 1; 3: b = 1
    std::vector<long> gens_ordered;
    std::vector<Poly> predicted_initial;
};

/// Classifier for 4-generated symmetric non-CI semigroups: quadratic iff
/// Koszul iff e(H) = 5 iff G(H) = {5, 4a+b, 2a+3b, 3a+2b} with a, b > 0 and
/// a - b not divisible by 5; on success the (a, b) pair is unique.
inline Symmetric4Verdict classify_symmetric_4(const NumericalSemigroup& H,
                                              uint32_t p = kDefaultPrime) {
    if (H.embdim() != 4) throw invalid_input("classify_symmetric_4: embdim must be 4");
    if (!H.is_symmetric()) throw hypothesis_failed("classify_symmetric_4: H is not symmetric");
    if (is_complete_intersection(H, p))
        throw hypothesis_failed("classify_symmetric_4: H is a complete intersection");
    Symmetric4Verdict v;
    if (H.multiplicity() != 5) return v;
    std::vector<long> rest(H.generators().begin() + 1, H.generators().end());
    std::sort(rest.begin(), rest.end());
    do {
        long pgen = rest[0], qgen = rest[1], rgen = rest[2]; // 4a+b, 2a+3b, 3a+2b
        long na = 3 * pgen - qgen, nb = 4 * qgen - 2 * pgen; // det 10 system
        if (na % 10 || nb % 10) continue;
        long a = na / 10, b = nb / 10;
        if (a <= 0 || b <= 0 || 3 * a + 2 * b != rgen) continue;
        if ((a - b) % 5 == 0) continue;
        v.quadratic = true;
        v.ab = {{a, b}};
        v.gens_ordered = {5, 4 * a + b, 2 * a + 3 * b, 3 * a + 2 * b};
        auto P = [&](const char* s) { return parse_poly(s, 4, p); };
        if (a != 1 && b != 1) {
            v.initial_branch = 1;
            v.predicted_initial = {P("x3*x4"), P("x2^2"), P("x3^2"),
                                   P("x4^2-x2*x3"), P("x2*x4")};
        } else if (a == 1 && b != 1) {
            v.initial_branch = 2;
            v.predicted_initial = {P("x3*x4"), P("x2^2-x1*x4"), P("x3^2"),
                                   P("x4^2-x2*x3"), P("x3*x1-x2*x4")};
        } else {
            v.initial_branch = 3;
            v.predicted_initial = {P("x3*x4"), P("x2^2"), P("x3^2-x1*x2"),
                                   P("x4^2-x2*x3"), P("x2*x4")};
        }
        return v;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return v;
}

// ---- Pseudo-symmetric 4-generated semigroups (Komeda) --------------------------------

struct KomedaParams {
    long c1, c2, c3, c4; // all > 1
    long a21;            // 0 < a21 < c1 - 1
};

struct PseudoSym4Family {
    NumericalSemigroup H;
    std::vector<long> gens_ordered;
    std::vector<Poly> f; // f_1..f_5 generating I_H
};

inline PseudoSym4Family komeda_pseudosymmetric(const KomedaParams& q,
                                               uint32_t p = kDefaultPrime) {
    if (q.c1 <= 1 || q.c2 <= 1 || q.c3 <= 1 || q.c4 <= 1)
        throw invalid_input("komeda_pseudosymmetric: c_i must exceed 1");
    if (!(0 < q.a21 && q.a21 < q.c1 - 1))
        throw invalid_input("komeda_pseudosymmetric: need 0 < a21 < c1 - 1");
    long a1 = q.c2 * q.c3 * (q.c4 - 1) + 1;
    long a2 = q.a21 * q.c3 * q.c4 + (q.c1 - q.a21 - 1) * (q.c3 - 1) + q.c3;
    long a3 = q.c1 * q.c4 + (q.c1 - q.a21 - 1) * (q.c2 - 1) * (q.c4 - 1) - q.c4 + 1;
    long a4 = q.c1 * q.c2 * (q.c3 - 1) + q.a21 * (q.c2 - 1) + q.c2;
    long g = std::gcd(std::gcd(a1, a2), std::gcd(a3, a4));
    if (g != 1) throw invalid_input("komeda_pseudosymmetric: generators not coprime");
    PseudoSym4Family fam{NumericalSemigroup::from_generators({a1, a2, a3, a4})};
    fam.gens_ordered = {a1, a2, a3, a4};
    if (fam.H.embdim() != 4)
        throw invalid_input("komeda_pseudosymmetric: generators are not minimal");
    auto mono = [&](std::initializer_list<std::pair<int, long>> factors) {
        Monomial m(4);
        for (auto& [var, e] : factors) m.e[var - 1] += static_cast<int>(e);
        return m;
    };
    auto bin = [&](Monomial head, Monomial tail) {
        return Poly::from_terms(4, {{Fp::one(p), head}, {-Fp::one(p), tail}});
    };
    fam.f = {
        bin(mono({{1, q.c1}}), mono({{3, 1}, {4, q.c4 - 1}})),
        bin(mono({{2, q.c2}}), mono({{1, q.a21}, {4, 1}})),
        bin(mono({{3, q.c3}}), mono({{1, q.c1 - q.a21 - 1}, {2, 1}})),
        bin(mono({{4, q.c4}}), mono({{1, 1}, {2, q.c2 - 1}, {3, q.c3 - 1}})),
        bin(mono({{3, q.c3 - 1}, {1, q.a21 + 1}}), mono({{2, 1}, {4, q.c4 - 1}})),
    };
    return fam;
}

struct PseudoSym4Verdict {
    bool quadratic = false; // = Koszul
    std::optional<std::pair<long, long>> ab; // G(H) = {5, 3a+b+1, 3b-a-2, a+2b+2}
    std::vector<long> gens_ordered;
};

/// Classifier for 4-generated pseudo-symmetric semigroups: quadratic iff
/// Koszul iff G(H) = {5, 3a+b+1, 3b-a-2, a+2b+2} with 0 < a < b-1 and
/// 5 not dividing 3a+b+1.
inline PseudoSym4Verdict classify_pseudosym_4(const NumericalSemigroup& H) {
    if (H.embdim() != 4) throw invalid_input("classify_pseudosym_4: embdim must be 4");
    if (!H.is_pseudo_symmetric())
        throw hypothesis_failed("classify_pseudosym_4: H is not pseudo-symmetric");
    PseudoSym4Verdict v;
    if (H.multiplicity() != 5) return v;
    std::vector<long> rest(H.generators().begin() + 1, H.generators().end());
    std::sort(rest.begin(), rest.end());
    do {
        long g2 = rest[0], g3 = rest[1], g4 = rest[2]; // 3a+b+1, 3b-a-2, a+2b+2
        // Solve 3a+b = g2-1, -a+3b = g3+2 (det 10).
        long na = 3 * (g2 - 1) - (g3 + 2), nb = 3 * (g3 + 2) + (g2 - 1);
        if (na % 10 || nb % 10) continue;
        long a = na / 10, b = nb / 10;
        if (!(0 < a && a < b - 1)) continue;
        if (a + 2 * b + 2 != g4) continue;
        if ((3 * a + b + 1) % 5 == 0) continue;
        v.quadratic = true;
        v.ab = {{a, b}};
        v.gens_ordered = {5, 3 * a + b + 1, 3 * b - a - 2, a + 2 * b + 2};
        return v;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return v;
}

// ---- Gorenstein property of the tangent cone -------------------------------------

/// gr_m K[H] is Gorenstein iff it is Cohen-Macaulay (x_1 regular) and the
/// artinian reduction A = S/(I* + (x_1)) has a one-dimensional socle.
inline bool is_gr_gorenstein(const IdealPresentation& Istar) {
    if (!is_tangent_cone_cm(Istar)) return false;
    int n = Istar.nvars();
    uint32_t p = Istar.prime();
    std::vector<Poly> gens = Istar.generators();
    gens.push_back(Poly::monomial(n, Fp::one(p), Monomial::var(0, n)));
    IdealPresentation A(n, p, std::move(gens));
    TermOrder ord = TermOrder::degrevlex(n);
    const auto& gb = A.groebner_basis(ord);
    std::vector<Monomial> lts;
    for (auto& g : gb) lts.push_back(g.leading_monomial(ord));
    // Standard monomials of the artinian quotient, degree by degree.
    std::vector<Monomial> basis;
    std::map<Monomial, int> index;
    for (int d = 0;; ++d) {
        bool found = false;
        for (auto& m : detail::monomials_of_degree(n, d)) {
            bool in_lt = false;
            for (auto& l : lts)
                if (l.divides(m)) { in_lt = true; break; }
            if (!in_lt) {
                index.emplace(m, static_cast<int>(basis.size()));
                basis.push_back(m);
                found = true;
            }
        }
        if (!found) break;
        if (d > 64) throw error("is_gr_gorenstein: artinian reduction did not terminate");
    }
    int dim = static_cast<int>(basis.size());
    // Socle = kernel of the stacked multiplication maps by all variables.
    FpMatrix M(dim * n, dim, p);
    for (int c = 0; c < dim; ++c)
        for (int j = 0; j < n; ++j) {
            Poly f = normal_form(
                Poly::monomial(n, Fp::one(p), basis[c] * Monomial::var(j, n)), gb, ord);
            for (auto& t : f.terms())
                M.set(j * dim + index.at(t.mono), c, t.coeff);
        }
    return M.kernel_basis().size() == 1;
}

} // namespace nsgp
