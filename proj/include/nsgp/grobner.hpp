#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nsgp/polynomial.hpp"

namespace nsgp {

/// Remainder of f on division by basis (full reduction: every term of the
/// remainder is irreducible). The reducer picked for a term is always the
/// first basis element whose leading term divides it, so the result is
/// deterministic for a fixed basis order.
template <typename C>
Polynomial<C> normal_form(Polynomial<C> f, const std::vector<Polynomial<C>>& basis,
                          const TermOrder& ord) {
    Polynomial<C> rem(f.nvars());
    while (!f.is_zero()) {
        const Term<C>& lt = f.leading_term(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            const Term<C>& lg = g.leading_term(ord);
            if (!lg.mono.divides(lt.mono)) continue;
            f = f - g.times_term(lt.coeff / lg.coeff, lg.mono.quotient_of(lt.mono));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = rem + Polynomial<C>::monomial(f.nvars(), lt.coeff, lt.mono);
            f = f - Polynomial<C>::monomial(f.nvars(), lt.coeff, lt.mono);
        }
    }
    return rem;
}

namespace detail {

template <typename C>
struct SPair {
    int i, j;
    Monomial l; // lcm of the leading monomials
};

} // namespace detail

/// The reduced Groebner basis of (gens) with respect to ord: Buchberger with
/// the normal selection strategy plus the coprimality and chain criteria,
/// followed by inter-reduction. Elements are monic and sorted ascending by
/// leading monomial, so the output is the canonical basis of the ideal.
template <typename C>
std::vector<Polynomial<C>> buchberger(std::vector<Polynomial<C>> gens,
                                      const TermOrder& ord) {
    std::vector<Polynomial<C>> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic(ord));
    if (G.empty()) return G;

    std::vector<detail::SPair<C>> pairs;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i)
            pairs.push_back({i, j, lcm(G[i].leading_monomial(ord),
                                       G[j].leading_monomial(ord))});
    };
    for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

    auto pick = [&]() -> size_t {
        // Normal strategy: smallest lcm degree, then smallest lcm in ord.
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            int dk = pairs[k].l.degree(), db = pairs[best].l.degree();
            if (dk < db || (dk == db && ord.less(pairs[k].l, pairs[best].l)))
                best = k;
        }
        return best;
    };

    while (!pairs.empty()) {
        size_t k = pick();
        detail::SPair<C> pr = pairs[k];
        pairs.erase(pairs.begin() + static_cast<long>(k));

        const Monomial& li = G[pr.i].leading_monomial(ord);
        const Monomial& lj = G[pr.j].leading_monomial(ord);
        if (li.coprime_with(lj)) continue; // Buchberger's first criterion
        // Chain criterion: some lt(G[m]) divides the lcm and both side pairs
        // are no longer queued.
        bool chained = false;
        for (int m = 0; m < static_cast<int>(G.size()) && !chained; ++m) {
            if (m == pr.i || m == pr.j) continue;
            if (!G[m].leading_monomial(ord).divides(pr.l)) continue;
            bool side_pending = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(pr.i, m) && q.j == std::max(pr.i, m)) ||
                    (q.i == std::min(pr.j, m) && q.j == std::max(pr.j, m))) {
                    side_pending = true;
                    break;
                }
            }
            if (!side_pending) chained = true;
        }
        if (chained) continue;

        Polynomial<C> r = normal_form(s_polynomial(G[pr.i], G[pr.j], ord), G, ord);
        if (r.is_zero()) continue;
        G.push_back(r.monic(ord));
        push_pairs(static_cast<int>(G.size()) - 1);
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<Polynomial<C>> min;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Monomial& li = G[i].leading_monomial(ord);
            const Monomial& lj = G[j].leading_monomial(ord);
            if (lj.divides(li) && (lj != li || j < i)) { redundant = true; break; }
        }
        if (!redundant) min.push_back(G[i]);
    }
    // Reduce tails.
    std::vector<Polynomial<C>> out;
    for (size_t i = 0; i < min.size(); ++i) {
        std::vector<Polynomial<C>> others;
        for (size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        Polynomial<C> r = normal_form(min[i], others, ord);
        out.push_back(r.monic(ord));
    }
    std::sort(out.begin(), out.end(),
              [&](const Polynomial<C>& a, const Polynomial<C>& b) {
                  return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
              });
    return out;
}

/// A polynomial ideal with per-order Groebner basis caching.
class IdealPresentation {
public:
    IdealPresentation(int nvars, uint32_t p, std::vector<Poly> gens = {})
        : nvars_(nvars), p_(p), gens_(std::move(gens)) {}

    int nvars() const { return nvars_; }
    uint32_t prime() const { return p_; }
    const std::vector<Poly>& generators() const { return gens_; }
    bool is_zero_ideal() const {
        for (auto& g : gens_)
            if (!g.is_zero()) return false;
        return true;
    }

    const std::vector<Poly>& groebner_basis(const TermOrder& ord) const {
        auto it = gb_.find(ord.key());
        if (it == gb_.end())
            it = gb_.emplace(ord.key(), buchberger(gens_, ord)).first;
        return it->second;
    }

    std::vector<Monomial> leading_monomials(const TermOrder& ord) const {
        std::vector<Monomial> out;
        for (auto& g : groebner_basis(ord)) out.push_back(g.leading_monomial(ord));
        return out;
    }

    bool contains(const Poly& f) const {
        if (f.is_zero()) return true;
        TermOrder ord = TermOrder::degrevlex(nvars_);
        return normal_form(f, groebner_basis(ord), ord).is_zero();
    }

    /// Ideal equality via uniqueness of the reduced Groebner basis.
    bool equals(const IdealPresentation& other) const {
        TermOrder ord = TermOrder::degrevlex(nvars_);
        return groebner_basis(ord) == other.groebner_basis(ord);
    }

    bool is_homogeneous() const {
        for (auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    /// Largest total degree appearing in the canonical reduced basis.
    int max_groebner_degree() const {
        TermOrder ord = TermOrder::degrevlex(nvars_);
        int d = 0;
        for (auto& g : groebner_basis(ord)) d = std::max(d, g.degree());
        return d;
    }

private:
    int nvars_;
    uint32_t p_;
    std::vector<Poly> gens_;
    mutable std::map<std::string, std::vector<Poly>> gb_;
};

/// Generators of I ∩ K[kept variables]: Groebner basis under a block order
/// ranking the eliminated variables above all others, filtered to elements
/// free of them. Output stays in the ambient ring.
inline std::vector<Poly> eliminate(const std::vector<Poly>& gens, int nvars,
                                   const std::vector<int>& elim_vars) {
    TermOrder ord = TermOrder::elimination_block(nvars, elim_vars);
    std::vector<char> elim(nvars, 0);
    for (int v : elim_vars) elim[v] = 1;
    std::vector<Poly> out;
    for (auto& g : buchberger(gens, ord)) {
        bool clean = true;
        for (auto& t : g.terms())
            for (int i = 0; i < nvars && clean; ++i)
                if (elim[i] && t.mono.e[i] > 0) clean = false;
        if (clean) out.push_back(g);
    }
    return out;
}

/// Re-embeds polynomials into K[kept variables] (indices renumbered in the
/// order given). Throws if any dropped variable actually occurs.
inline std::vector<Poly> restrict_to_vars(const std::vector<Poly>& polys,
                                          int nvars, const std::vector<int>& kept) {
    std::vector<int> pos(nvars, -1);
    for (size_t k = 0; k < kept.size(); ++k) pos[kept[k]] = static_cast<int>(k);
    std::vector<Poly> out;
    for (auto& f : polys) {
        std::vector<Term<Fp>> ts;
        for (auto& t : f.terms()) {
            Monomial m(static_cast<int>(kept.size()));
            for (int i = 0; i < nvars; ++i) {
                if (t.mono.e[i] == 0) continue;
                if (pos[i] < 0)
                    throw invalid_input("restrict_to_vars: dropped variable occurs");
                m.e[pos[i]] = t.mono.e[i];
            }
            ts.push_back({t.coeff, m});
        }
        out.push_back(Poly::from_terms(static_cast<int>(kept.size()), std::move(ts)));
    }
    return out;
}

/// Generators of (I : x_v) for a homogeneous ideal I. Uses a degrevlex order
/// ranking x_v last: for homogeneous g, x_v | lt(g) forces x_v | g, and then
/// { g : x_v does not divide lt(g) } ∪ { g/x_v : x_v | g } generates I : x_v.
inline std::vector<Poly> ideal_quotient_by_variable(const IdealPresentation& I,
                                                    int v) {
    if (!I.is_homogeneous())
        throw non_homogeneous_input("ideal_quotient_by_variable: ideal must be homogeneous");
    int n = I.nvars();
    std::vector<int> perm;
    for (int i = 0; i < n; ++i)
        if (i != v) perm.push_back(i);
    perm.push_back(v); // ranked last
    TermOrder ord = TermOrder::with_perm(n, perm, OrderKind::DegRevLex);
    Monomial xv = Monomial::var(v, n);
    std::vector<Poly> out;
    for (auto& g : I.groebner_basis(ord)) {
        if (xv.divides(g.leading_monomial(ord))) {
            std::vector<Term<Fp>> ts;
            for (auto& t : g.terms()) {
                if (!xv.divides(t.mono))
                    throw error("ideal_quotient_by_variable: internal divisibility failure");
                ts.push_back({t.coeff, xv.quotient_of(t.mono)});
            }
            out.push_back(Poly::from_terms(n, std::move(ts)));
        } else {
            out.push_back(g);
        }
    }
    return out;
}

// ---- Hilbert series of monomial quotients ------------------------------

namespace detail {

using ZPoly = std::vector<long long>; // coefficient list, index = degree

inline ZPoly zp_one() { return {1}; }

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline ZPoly zp_shift(const ZPoly& a, int k) {
    ZPoly r(a.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline void zp_trim(ZPoly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (size_t i = 0; i < ms.size(); ++i) {
        bool covered = false;
        for (size_t j = 0; j < ms.size(); ++j)
            if (j != i && ms[j].divides(ms[i]) && ms[j] != ms[i]) { covered = true; break; }
        if (!covered) out.push_back(ms[i]);
    }
    return out;
}

/// Numerator N(T) of Hilb(S/I) = N(T)/(1-T)^n for a monomial ideal given by
/// minimal generators. Recursion N_I = N_{I+(x_j)} + T * N_{I : x_j}, with
/// pure-power base case prod (1 - T^{a_i}).
inline ZPoly hilbert_numerator_rec(std::vector<Monomial> gens, int nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (!gens.empty() && gens[0].is_one()) return {0}; // I = S
    bool all_pure = true;
    for (auto& m : gens) {
        int nz = 0;
        for (int i = 0; i < nvars; ++i)
            if (m.e[i] > 0) ++nz;
        if (nz > 1) { all_pure = false; break; }
    }
    if (all_pure) {
        ZPoly r = zp_one();
        for (auto& m : gens) {
            ZPoly f(static_cast<size_t>(m.degree()) + 1, 0);
            f[0] = 1;
            f[static_cast<size_t>(m.degree())] = -1;
            r = zp_mul(r, f);
        }
        return r;
    }
    // Pivot: the most frequent variable among mixed generators.
    std::vector<int> freq(nvars, 0);
    for (auto& m : gens) {
        int nz = 0;
        for (int i = 0; i < nvars; ++i)
            if (m.e[i] > 0) ++nz;
        if (nz > 1)
            for (int i = 0; i < nvars; ++i)
                if (m.e[i] > 0) ++freq[i];
    }
    int piv = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    std::vector<Monomial> plus; // I + (x_piv)
    plus.push_back(Monomial::var(piv, nvars));
    for (auto& m : gens)
        if (m.e[piv] == 0) plus.push_back(m);
    std::vector<Monomial> quot; // I : x_piv
    for (auto& m : gens) {
        Monomial q = m;
        if (q.e[piv] > 0) --q.e[piv];
        quot.push_back(q);
    }
    ZPoly r = zp_add(hilbert_numerator_rec(std::move(plus), nvars),
                     zp_shift(hilbert_numerator_rec(std::move(quot), nvars), 1));
    zp_trim(r);
    return r;
}

} // namespace detail

/// Hilbert series data of a homogeneous quotient S/I: the numerator over
/// (1-T)^nvars, plus Krull dimension and multiplicity read off from it.
struct HilbertSeries {
    std::vector<long long> numerator; // over (1-T)^nvars
    int nvars = 0;
    int dimension = 0;
    long long multiplicity = 0;

    /// H(S/I, d) by expanding N(T) / (1-T)^n.
    long long value_at(long d) const {
        if (d < 0) return 0;
        // 1/(1-T)^n has coefficients C(d+n-1, n-1); accumulate exactly.
        long long acc = 0;
        for (size_t k = 0; k < numerator.size(); ++k) {
            long m = d - static_cast<long>(k);
            if (m < 0) break;
            // C(m + n - 1, n - 1)
            long long binom = 1;
            for (int i = 1; i <= nvars - 1; ++i)
                binom = binom * (m + i) / i;
            if (nvars == 0) binom = (m == 0) ? 1 : 0;
            acc += numerator[k] * binom;
        }
        return acc;
    }
};

/// Hilbert series of S/I for homogeneous I, via the leading-term ideal of
/// the canonical Groebner basis. Throws on non-homogeneous input.
inline HilbertSeries quotient_hilbert_series(const IdealPresentation& I) {
    if (!I.is_homogeneous())
        throw non_homogeneous_input("quotient_hilbert_series: ideal must be homogeneous");
    TermOrder ord = TermOrder::degrevlex(I.nvars());
    detail::ZPoly num = detail::hilbert_numerator_rec(I.leading_monomials(ord), I.nvars());
    detail::zp_trim(num);
    HilbertSeries hs;
    hs.nvars = I.nvars();
    // Factor out (1-T)^s from the numerator; dim = nvars - s.
    int s = 0;
    detail::ZPoly cur = num;
    auto value_at_one = [](const detail::ZPoly& f) {
        long long v = 0;
        for (long long c : f) v += c;
        return v;
    };
    while (value_at_one(cur) == 0 && !(cur.size() == 1 && cur[0] == 0)) {
        // Divide by (1-T): synthetic division.
        detail::ZPoly q(cur.size() > 1 ? cur.size() - 1 : 1, 0);
        long long carry = 0;
        for (size_t i = 0; i + 1 < cur.size() || i < 1; ++i) {
            long long c = (i < cur.size() ? cur[i] : 0) + carry;
            if (i < q.size()) q[i] = c;
            carry = c;
        }
        detail::zp_trim(q);
        cur = q;
        ++s;
    }
    hs.numerator = num;
    if (cur.size() == 1 && cur[0] == 0) {
        hs.dimension = -1; // zero ring
        hs.multiplicity = 0;
    } else {
        hs.dimension = I.nvars() - s;
        hs.multiplicity = value_at_one(cur);
    }
    return hs;
}

inline long long quotient_hilbert_function(const IdealPresentation& I, long d) {
    return quotient_hilbert_series(I).value_at(d);
}

} // namespace nsgp
