#pragma once

#include <algorithm>
#include <vector>

#include "nsgp/grobner.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

/// Degree of a monomial under x_i -> t^{a_i}.
inline long semigroup_degree(const Monomial& m, const std::vector<long>& a) {
    long d = 0;
    for (int i = 0; i < m.nvars(); ++i) d += static_cast<long>(m.e[i]) * a[i];
    return d;
}

/// Canonical form of a pure-difference binomial (or monomial): common
/// monomial factor removed, leading coefficient +1, leading monomial first.
inline Poly normalize_binomial(const Poly& f) {
    if (f.is_zero()) return f;
    const auto& ts = f.terms();
    if (ts.size() > 2) throw invalid_input("normalize_binomial: more than two terms");
    Monomial g = ts[0].mono;
    if (ts.size() == 2) g = gcd(g, ts[1].mono);
    std::vector<Term<Fp>> out;
    for (auto& t : ts) out.push_back({t.coeff, g.quotient_of(t.mono)});
    Poly r = Poly::from_terms(f.nvars(), std::move(out));
    TermOrder canon = TermOrder::degrevlex(f.nvars());
    return r.monic(canon);
}

/// The toric ideal I_H = ker(x_i -> t^{a_i}) for an ordered generator list,
/// computed by eliminating t from (x_i - t^{a_i}). Generators are returned
/// as normalized pure-difference binomials.
inline IdealPresentation toric_ideal_ordered(const std::vector<long>& a,
                                             uint32_t p = kDefaultPrime) {
    int n = static_cast<int>(a.size());
    int nv = n + 1; // x1..xn, then t as the last variable
    std::vector<Poly> gens;
    for (int i = 0; i < n; ++i) {
        Monomial tpow(nv);
        tpow.e[n] = static_cast<int>(a[i]);
        gens.push_back(Poly::from_terms(
            nv, {{Fp::one(p), Monomial::var(i, nv)}, {-Fp::one(p), tpow}}));
    }
    std::vector<Poly> elim = eliminate(gens, nv, {n});
    std::vector<int> kept;
    for (int i = 0; i < n; ++i) kept.push_back(i);
    std::vector<Poly> xs = restrict_to_vars(elim, nv, kept);
    for (auto& f : xs) f = normalize_binomial(f);
    return IdealPresentation(n, p, std::move(xs));
}

inline IdealPresentation toric_ideal(const NumericalSemigroup& H,
                                     uint32_t p = kDefaultPrime) {
    return toric_ideal_ordered(H.generators(), p);
}

/// A minimal generating subset of a toric ideal, extracted greedily by
/// increasing semigroup degree (graded Nakayama). mu(I_H) is its size.
inline std::vector<Poly> minimal_binomial_generators(const IdealPresentation& I,
                                                     const std::vector<long>& a) {
    TermOrder canon = TermOrder::degrevlex(I.nvars());
    std::vector<Poly> cand = I.groebner_basis(canon);
    for (auto& f : cand) f = normalize_binomial(f);
    std::stable_sort(cand.begin(), cand.end(), [&](const Poly& f, const Poly& g) {
        long df = semigroup_degree(f.leading_monomial(canon), a);
        long dg = semigroup_degree(g.leading_monomial(canon), a);
        if (df != dg) return df < dg;
        return canon.less(f.leading_monomial(canon), g.leading_monomial(canon));
    });
    std::vector<Poly> kept;
    for (auto& f : cand) {
        IdealPresentation J(I.nvars(), I.prime(), kept);
        if (!J.contains(f)) kept.push_back(f);
    }
    return kept;
}

inline int mu_toric(const IdealPresentation& I, const std::vector<long>& a) {
    return static_cast<int>(minimal_binomial_generators(I, a).size());
}

/// Critical exponent data: c_i minimal with c_i a_i in the monoid spanned by
/// the other generators, plus one witness monomial per generator.
struct CriticalExponents {
    std::vector<long> c;            // per generator index
    std::vector<Monomial> witness;  // in K[x1..xn], variable i unused in witness[i]
};

namespace detail {

/// All-representations DFS: finds the exponent vector over `vals` (indices
/// into the ambient ring given by `vars`) representing `target`, preferring
/// witnesses supported on >= 2 variables; among those of the preferred kind
/// the lexicographically greatest exponent vector is returned.
inline bool rep_search(long target, const std::vector<long>& vals,
                       const std::vector<int>& vars, size_t k,
                       Monomial& cur, Monomial& best_mixed, Monomial& best_any,
                       int nvars) {
    if (k == vals.size()) {
        if (target != 0) return false;
        int support = 0;
        for (int i = 0; i < nvars; ++i)
            if (cur.e[i] > 0) ++support;
        if (best_any.nvars() == 0) best_any = cur;
        if (support >= 2 && best_mixed.nvars() == 0) best_mixed = cur;
        return best_mixed.nvars() != 0;
    }
    for (long q = target / vals[k]; q >= 0; --q) {
        cur.e[vars[k]] = static_cast<int>(q);
        if (rep_search(target - q * vals[k], vals, vars, k + 1, cur, best_mixed,
                       best_any, nvars))
            return true; // first mixed witness in lex-descending order wins
        cur.e[vars[k]] = 0;
    }
    return false;
}

} // namespace detail

inline CriticalExponents critical_exponents(const NumericalSemigroup& H) {
    const auto& a = H.generators();
    int n = static_cast<int>(a.size());
    if (n < 2) throw invalid_input("critical_exponents: embdim >= 2 required");
    CriticalExponents out;
    out.c.resize(n);
    out.witness.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<long> vals;
        std::vector<int> vars;
        for (int j = 0; j < n; ++j)
            if (j != i) { vals.push_back(a[j]); vars.push_back(j); }
        for (long c = 1;; ++c) {
            Monomial cur(n), mixed, any;
            detail::rep_search(c * a[i], vals, vars, 0, cur, mixed, any, n);
            if (any.nvars() != 0) {
                out.c[i] = c;
                out.witness[i] = mixed.nvars() != 0 ? mixed : any;
                break;
            }
        }
    }
    return out;
}

/// The binomials f_i = x_i^{c_i} - witness_i built from critical exponents.
inline std::vector<Poly> critical_binomials(const NumericalSemigroup& H,
                                            uint32_t p = kDefaultPrime) {
    CriticalExponents ce = critical_exponents(H);
    int n = H.embdim();
    std::vector<Poly> out;
    for (int i = 0; i < n; ++i) {
        Monomial lead = Monomial::var(i, n, static_cast<int>(ce.c[i]));
        out.push_back(Poly::from_terms(
            n, {{Fp::one(p), lead}, {-Fp::one(p), ce.witness[i]}}));
    }
    return out;
}

} // namespace nsgp
