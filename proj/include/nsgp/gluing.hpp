#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nsgp/tangent_cone.hpp"

namespace nsgp {

// ---- Gluing constructors --------------------------------------------------

inline void check_simple_glue(const NumericalSemigroup& L, long c, long ell) {
    if (c <= 1) throw invalid_input("simple_glue: c must exceed 1");
    if (std::gcd(c, ell) != 1) throw not_coprime("simple_glue: gcd(c, ell) != 1");
    if (!L.contains(ell)) throw not_in_semigroup("simple_glue: ell not in L");
    for (long a : L.generators())
        if (a == ell) throw is_generator("simple_glue: ell is a minimal generator of L");
}

/// H = <c*G(L), ell>. Variable convention downstream: ell is the last
/// variable, so ordered generator lists put ell at the end.
inline NumericalSemigroup simple_glue(const NumericalSemigroup& L, long c, long ell) {
    check_simple_glue(L, c, ell);
    std::vector<long> gens;
    for (long a : L.generators()) gens.push_back(c * a);
    gens.push_back(ell);
    NumericalSemigroup H = NumericalSemigroup::from_generators(gens);
    if (H.embdim() != L.embdim() + 1)
        throw error("simple_glue: embedding dimension did not grow");
    return H;
}

inline NumericalSemigroup quadratic_glue(const NumericalSemigroup& L, long ell) {
    return simple_glue(L, 2, ell);
}

/// Ordered generator list of <c*G(L), ell> matching the variable convention.
inline std::vector<long> glued_generators_ordered(const NumericalSemigroup& L,
                                                  long c, long ell) {
    std::vector<long> gens;
    for (long a : L.generators()) gens.push_back(c * a);
    gens.push_back(ell);
    return gens;
}

// ---- Gluing relation -------------------------------------------------------

namespace detail {

/// Does value admit a representation of exactly the given length over
/// gens[idx..]? Memoized per top-level query.
inline bool rep_of_length(long value, long len, size_t idx,
                          const std::vector<long>& gens,
                          std::map<std::tuple<long, long, size_t>, bool>& memo) {
    if (idx == gens.size()) return value == 0 && len == 0;
    if (value < 0 || len < 0) return false;
    auto key = std::make_tuple(value, len, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (long q = 0; q * gens[idx] <= value && q <= len; ++q)
        if (rep_of_length(value - q * gens[idx], len - q, idx + 1, gens, memo)) {
            ok = true;
            break;
        }
    memo.emplace(key, ok);
    return ok;
}

} // namespace detail

/// The exponent vector of the maximal-length representation of ell over
/// G(L), with ties broken by the lexicographically greatest (lambda_1,
/// lambda_2, ...). Sum of entries = ord_L(ell).
inline std::vector<long> ord_witness(const NumericalSemigroup& L, long ell) {
    const auto& g = L.generators();
    long remaining_len = L.order_of(ell);
    long remaining_val = ell;
    std::map<std::tuple<long, long, size_t>, bool> memo;
    std::vector<long> lam(g.size(), 0);
    for (size_t i = 0; i < g.size(); ++i) {
        long cap = std::min(remaining_len, g[i] > 0 ? remaining_val / g[i] : 0);
        for (long q = cap; q >= 0; --q) {
            if (detail::rep_of_length(remaining_val - q * g[i], remaining_len - q,
                                      i + 1, g, memo)) {
                lam[i] = q;
                remaining_val -= q * g[i];
                remaining_len -= q;
                break;
            }
        }
    }
    if (remaining_val != 0 || remaining_len != 0)
        throw error("ord_witness: witness extraction failed");
    return lam;
}

/// f = x_n^c - prod x_i^{lambda_i} in K[x_1..x_n], n = embdim(L) + 1, where
/// (lambda_i) is the canonical ord witness for ell over L.
inline Poly gluing_relation(const NumericalSemigroup& L, long c, long ell,
                            uint32_t p = kDefaultPrime) {
    check_simple_glue(L, c, ell);
    int n = L.embdim() + 1;
    std::vector<long> lam = ord_witness(L, ell);
    Monomial tail(n);
    for (int i = 0; i < n - 1; ++i) tail.e[i] = static_cast<int>(lam[i]);
    Monomial head = Monomial::var(n - 1, n, static_cast<int>(c));
    return Poly::from_terms(n, {{Fp::one(p), head}, {-Fp::one(p), tail}});
}

// ---- Tangent cone of a gluing ----------------------------------------------

struct GluingTangentCone {
    IdealPresentation ideal;     // I_H* in the glued variable order
    bool formula_applied = false; // true: (I_L* S, f*) route; false: direct fallback
};

/// I_H* for H = <cL, ell>. When c <= ord_L(ell) the transfer formula
/// I_H* = (I_L* S, f*) applies and is asserted against the direct
/// computation; otherwise the direct computation is returned with
/// formula_applied = false.
inline GluingTangentCone tangent_cone_of_gluing(const NumericalSemigroup& L,
                                                long c, long ell,
                                                uint32_t p = kDefaultPrime) {
    check_simple_glue(L, c, ell);
    NumericalSemigroup H = simple_glue(L, c, ell);
    std::vector<long> ordered = glued_generators_ordered(L, c, ell);
    IdealPresentation IH = toric_ideal_ordered(ordered, p);
    IdealPresentation direct = standard_basis(IH, H).initial_ideal;
    int n = L.embdim() + 1;
    if (c > L.order_of(ell)) return {direct, false};

    // Transfer formula: embed I_L* into the first n-1 variables, add f*.
    IdealPresentation IstarL = tangent_cone_ideal(L, p);
    std::vector<Poly> gens;
    for (auto& g : IstarL.generators()) {
        std::vector<Term<Fp>> ts;
        for (auto& t : g.terms()) {
            Monomial m(n);
            for (int i = 0; i < n - 1; ++i) m.e[i] = t.mono.e[i];
            ts.push_back({t.coeff, m});
        }
        gens.push_back(Poly::from_terms(n, std::move(ts)));
    }
    gens.push_back(gluing_relation(L, c, ell, p).initial_form());
    IdealPresentation formula(n, p, std::move(gens));
    if (!formula.equals(direct))
        throw error("tangent_cone_of_gluing: transfer formula disagrees with direct computation");
    return {formula, true};
}

// ---- Delorme decomposition --------------------------------------------------

struct GluingTree {
    enum class Kind { Leaf, SimpleGlue, PairGlue };
    Kind kind = Kind::Leaf;
    std::vector<long> gens; // composed semigroup at this node (minimal, sorted)

    // SimpleGlue: H = <c * child, ell>
    std::shared_ptr<GluingTree> child;
    long c = 0, ell = 0;

    // PairGlue: H = <c1 * left, c2 * right>
    std::shared_ptr<GluingTree> left, right;
    long c1 = 0, c2 = 0;

    NumericalSemigroup semigroup() const {
        return NumericalSemigroup::from_generators(gens);
    }
};

using GluingTreePtr = std::shared_ptr<GluingTree>;

namespace detail {

inline GluingTreePtr make_leaf(const std::vector<long>& gens) {
    auto t = std::make_shared<GluingTree>();
    t->kind = GluingTree::Kind::Leaf;
    t->gens = gens;
    return t;
}

inline std::optional<GluingTreePtr> delorme_rec(
    const std::vector<long>& gens,
    std::map<std::vector<long>, std::optional<GluingTreePtr>>& memo);

/// Attempt the partition (A, B) of the generators; returns a node on success.
inline std::optional<GluingTreePtr> try_partition(
    const std::vector<long>& gens, const std::vector<long>& A,
    const std::vector<long>& B,
    std::map<std::vector<long>, std::optional<GluingTreePtr>>& memo) {
    long c1 = 0, c2 = 0;
    for (long a : A) c1 = std::gcd(c1, a);
    for (long b : B) c2 = std::gcd(c2, b);
    if (std::gcd(c1, c2) != 1) return std::nullopt;
    std::vector<long> g1, g2;
    for (long a : A) g1.push_back(a / c1);
    for (long b : B) g2.push_back(b / c2);
    NumericalSemigroup H1 = NumericalSemigroup::from_generators(g1);
    NumericalSemigroup H2 = NumericalSemigroup::from_generators(g2);
    if (H1.generators().size() != g1.size() || H2.generators().size() != g2.size())
        return std::nullopt; // halves must stay minimally generated
    // c1 in H2 \ G(H2), c2 in H1 \ G(H1)
    auto in_but_not_gen = [](const NumericalSemigroup& H, long v) {
        if (!H.contains(v)) return false;
        for (long a : H.generators())
            if (a == v) return false;
        return true;
    };
    if (!in_but_not_gen(H2, c1) || !in_but_not_gen(H1, c2)) return std::nullopt;
    auto t1 = delorme_rec(H1.generators(), memo);
    if (!t1) return std::nullopt;
    auto t2 = delorme_rec(H2.generators(), memo);
    if (!t2) return std::nullopt;
    auto node = std::make_shared<GluingTree>();
    node->gens = gens;
    if (H2.is_natural_numbers()) {
        node->kind = GluingTree::Kind::SimpleGlue;
        node->child = *t1;
        node->c = c1;
        node->ell = c2;
    } else if (H1.is_natural_numbers()) {
        node->kind = GluingTree::Kind::SimpleGlue;
        node->child = *t2;
        node->c = c2;
        node->ell = c1;
    } else {
        node->kind = GluingTree::Kind::PairGlue;
        node->left = *t1;
        node->right = *t2;
        node->c1 = c1;
        node->c2 = c2;
    }
    return node;
}

inline std::optional<GluingTreePtr> delorme_rec(
    const std::vector<long>& gens,
    std::map<std::vector<long>, std::optional<GluingTreePtr>>& memo) {
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;
    std::optional<GluingTreePtr> result;
    if (gens.size() == 1) {
        result = make_leaf(gens); // N (gens = {1}) -- only N has embdim 1 here
    } else {
        size_t n = gens.size();
        // Canonical subset order: A determined by bitmask over generator
        // indices; require index 0 in A to halve the search, masks ascending.
        for (unsigned long mask = 1; mask < (1ul << n) && !result; ++mask) {
            if (!(mask & 1ul)) continue;
            if (mask == (1ul << n) - 1) continue;
            std::vector<long> A, B;
            for (size_t i = 0; i < n; ++i)
                ((mask >> i) & 1ul ? A : B).push_back(gens[i]);
            result = try_partition(gens, A, B, memo);
        }
    }
    memo.emplace(gens, result);
    return result;
}

} // namespace detail

/// Delorme's theorem as a decision procedure: returns a full gluing tree iff
/// K[H] is a complete intersection.
inline std::optional<GluingTreePtr> delorme_decompose(const NumericalSemigroup& H) {
    std::map<std::vector<long>, std::optional<GluingTreePtr>> memo;
    return detail::delorme_rec(H.generators(), memo);
}

// ---- Quadratic gluing chains -------------------------------------------------

struct QuadraticChainResult {
    std::optional<std::vector<long>> chain; // ell_1 .. ell_{n-1}, from N upward
    std::string failure_reason;
};

/// For quadratic CI semigroups: the unique chain of quadratic gluings
/// building H from N. Peels the unique odd minimal generator at each step.
inline QuadraticChainResult quadratic_gluing_chain(const NumericalSemigroup& H,
                                                   uint32_t p = kDefaultPrime) {
    QuadraticChainResult r;
    if (H.is_natural_numbers()) {
        r.chain = std::vector<long>{};
        return r;
    }
    if (!is_complete_intersection(H, p)) {
        r.failure_reason = "not a complete intersection";
        return r;
    }
    if (!is_quadratic(H, nullptr, p).quadratic) {
        r.failure_reason = "not quadratic";
        return r;
    }
    std::vector<long> peeled;
    NumericalSemigroup cur = H;
    while (!cur.is_natural_numbers()) {
        std::vector<long> odds, evens;
        for (long a : cur.generators())
            (a % 2 ? odds : evens).push_back(a);
        if (odds.size() != 1)
            throw error("quadratic_gluing_chain: expected exactly one odd minimal generator");
        long ell = odds[0];
        for (auto& a : evens) a /= 2;
        NumericalSemigroup L = NumericalSemigroup::from_generators(evens);
        if (L.embdim() != cur.embdim() - 1)
            throw error("quadratic_gluing_chain: halved generators not minimal");
        check_simple_glue(L, 2, ell); // ell in L \ G(L), odd by construction
        peeled.push_back(ell);
        cur = L;
    }
    std::reverse(peeled.begin(), peeled.end());
    // Recomposition check.
    NumericalSemigroup rebuild = NumericalSemigroup::from_generators({1});
    for (long ell : peeled) rebuild = quadratic_glue(rebuild, ell);
    if (!(rebuild == H))
        throw error("quadratic_gluing_chain: recomposition mismatch");
    r.chain = peeled;
    return r;
}

} // namespace nsgp
