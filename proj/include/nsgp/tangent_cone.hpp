#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsgp/linalg.hpp"
#include "nsgp/toric.hpp"

namespace nsgp {

// ---- Homogenization machinery -------------------------------------------

/// Order on K[x1..xn, t] for standard-basis computation via homogenization:
/// total degree first, then larger t-exponent wins, then degrevlex on x.
/// A Groebner basis under this order dehomogenizes (t -> 1) to a standard
/// basis for the degree filtration, so the initial forms generate I*.
inline TermOrder standard_basis_order(int nx) {
    TermOrder o = TermOrder::degrevlex(nx + 1);
    std::vector<int> total(nx + 1, 1);
    std::vector<int> trow(nx + 1, 0);
    trow[nx] = 1;
    o.weight_rows.push_back(std::move(total));
    o.weight_rows.push_back(std::move(trow));
    return o;
}

/// f^h = t^{deg f} f(x/t): every term padded to top degree with t-powers.
inline Poly homogenize(const Poly& f, int nx) {
    if (f.is_zero()) return Poly(nx + 1);
    int d = f.degree();
    std::vector<Term<Fp>> ts;
    for (auto& t : f.terms()) {
        Monomial m(nx + 1);
        for (int i = 0; i < nx; ++i) m.e[i] = t.mono.e[i];
        m.e[nx] = d - t.mono.degree();
        ts.push_back({t.coeff, m});
    }
    return Poly::from_terms(nx + 1, std::move(ts));
}

inline Poly dehomogenize(const Poly& f, int nx) {
    std::vector<Term<Fp>> ts;
    for (auto& t : f.terms()) {
        Monomial m(nx);
        for (int i = 0; i < nx; ++i) m.e[i] = t.mono.e[i];
        ts.push_back({t.coeff, m});
    }
    return Poly::from_terms(nx, std::move(ts));
}

/// (J : t^inf) by iterating the single-variable quotient to a fixed point.
inline IdealPresentation saturate_by_variable(IdealPresentation J, int v) {
    for (;;) {
        IdealPresentation next(J.nvars(), J.prime(), ideal_quotient_by_variable(J, v));
        if (next.equals(J)) return J;
        J = std::move(next);
    }
}

// ---- Standard bases and I* ----------------------------------------------

struct StandardBasisResult {
    std::vector<Poly> basis;        // polynomials in I_H whose f* generate I_H*
    IdealPresentation initial_ideal; // I_H*
    bool minimal = false;
};

namespace detail {

/// Certifies Hilb(S/Istar) against the combinatorial order-count oracle.
inline void certify_against_oracle(const IdealPresentation& Istar,
                                   const NumericalSemigroup& H) {
    long upto = H.gr_hilbert_stabilization() + 2;
    HilbertSeries hs = quotient_hilbert_series(Istar);
    for (long d = 0; d <= upto; ++d) {
        if (hs.value_at(d) != H.gr_hilbert_function(d))
            throw oracle_mismatch(
                "tangent cone Hilbert function disagrees with the semigroup "
                "oracle in degree " + std::to_string(d));
    }
}

} // namespace detail

/// The ideal of initial forms I* = (f* : f in I), via homogenization,
/// t-saturation and a Groebner basis under standard_basis_order. The result
/// is certified against the semigroup oracle before being returned.
inline StandardBasisResult standard_basis(const IdealPresentation& I,
                                          const NumericalSemigroup& H) {
    int n = I.nvars();
    uint32_t p = I.prime();
    if (I.is_zero_ideal()) {
        StandardBasisResult r{{}, IdealPresentation(n, p, {}), true};
        detail::certify_against_oracle(r.initial_ideal, H);
        return r;
    }
    std::vector<Poly> hgens;
    for (auto& g : I.generators())
        if (!g.is_zero()) hgens.push_back(homogenize(g, n));
    IdealPresentation Jh = saturate_by_variable(
        IdealPresentation(n + 1, p, std::move(hgens)), n);
    TermOrder ord = standard_basis_order(n);
    std::vector<Poly> basis;
    std::vector<Poly> inits;
    for (auto& g : Jh.groebner_basis(ord)) {
        Poly f = dehomogenize(g, n);
        basis.push_back(f);
        inits.push_back(f.initial_form());
    }
    IdealPresentation Istar(n, p, inits);
    detail::certify_against_oracle(Istar, H);

    // Prune to a minimal standard basis: drop f while the remaining initial
    // forms still generate I*. Greedy over the deterministic basis order.
    for (size_t i = 0; i < basis.size();) {
        std::vector<Poly> rest;
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i) rest.push_back(inits[j]);
        if (IdealPresentation(n, p, rest).equals(Istar)) {
            basis.erase(basis.begin() + static_cast<long>(i));
            inits.erase(inits.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    IdealPresentation pruned(n, p, std::move(inits));
    return StandardBasisResult{std::move(basis), std::move(pruned), true};
}

inline IdealPresentation tangent_cone_ideal(const NumericalSemigroup& H,
                                            uint32_t p = kDefaultPrime) {
    return standard_basis(toric_ideal(H, p), H).initial_ideal;
}

// ---- Minimal generator degrees of a homogeneous ideal -------------------

namespace detail {

inline void monomials_of_degree_rec(int nvars, int d, int pos, Monomial& cur,
                                    std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur.e[pos] = d;
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur.e[pos] = k;
        monomials_of_degree_rec(nvars, d - k, pos + 1, cur, out);
        cur.e[pos] = 0;
    }
}

inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    if (nvars == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    monomials_of_degree_rec(nvars, d, 0, cur, out);
    return out;
}

} // namespace nsgp::detail

/// Degrees of a minimal homogeneous generating system of I, via graded
/// Nakayama: contribution in degree d is dim I_d - dim (S_1 * I_{d-1})_d.
/// A degree-d basis of I is { m - NF(m) : m in LT(I)_d } = { m : m in LT(I)_d }
/// since NF of a leading monomial of I is I-equivalent data; we use the
/// monomials of the initial ideal as coordinates of I_d directly.
inline std::vector<int> minimal_generators_degrees(const IdealPresentation& I) {
    if (!I.is_homogeneous())
        throw non_homogeneous_input("minimal_generators_degrees: ideal must be homogeneous");
    if (I.is_zero_ideal()) return {};
    int n = I.nvars();
    uint32_t p = I.prime();
    TermOrder ord = TermOrder::degrevlex(n);
    const auto& gb = I.groebner_basis(ord);
    std::vector<Monomial> lts;
    for (auto& g : gb) lts.push_back(g.leading_monomial(ord));
    int maxd = I.max_groebner_degree();

    std::vector<int> out;
    std::vector<Monomial> prev_ideal_mons; // monomials of LT(I) in degree d-1
    for (int d = 1; d <= maxd; ++d) {
        std::vector<Monomial> mons = detail::monomials_of_degree(n, d);
        std::map<Monomial, int> index;
        std::vector<Monomial> ideal_mons;
        for (auto& m : mons) {
            bool inlt = false;
            for (auto& l : lts)
                if (l.divides(m)) { inlt = true; break; }
            if (inlt) {
                index.emplace(m, static_cast<int>(ideal_mons.size()));
                ideal_mons.push_back(m);
            }
        }
        int dim_Id = static_cast<int>(ideal_mons.size());
        if (dim_Id > 0) {
            // Span of x_j * (basis of I_{d-1}) inside I_d. Basis vectors of
            // I_{d-1} are m - NF(m) over monomials m of LT(I)_{d-1}; then
            // x_j*(m - NF(m)) rewritten in the coordinates {m' - NF(m')} of
            // I_d: the coordinate vector is read off the LT(I)-monomial
            // support after reducing the tail.
            RowSpace span(dim_Id, p);
            for (auto& m : prev_ideal_mons) {
                Poly f = Poly::monomial(n, Fp::one(p), m);
                Poly fred = f - normal_form(f, gb, ord); // in I, lead m
                for (int j = 0; j < n; ++j) {
                    Poly g = fred.times_term(Fp::one(p), Monomial::var(j, n));
                    // Coordinates of g in the basis {m' - NF(m')}: reduce the
                    // non-LT(I) part away; the LT(I)-monomial coefficients
                    // that remain are the coordinates.
                    std::vector<Fp> coords(dim_Id, Fp::zero(p));
                    Poly cur = g;
                    while (!cur.is_zero()) {
                        // peel terms; LT(I) monomials give coordinates, the
                        // rest must cancel against the NF tails.
                        bool progressed = false;
                        for (auto& t : cur.terms()) {
                            auto it = index.find(t.mono);
                            if (it != index.end()) {
                                coords[it->second] = coords[it->second] + t.coeff;
                                Poly b = Poly::monomial(n, Fp::one(p), t.mono);
                                Poly basisvec = b - normal_form(b, gb, ord);
                                cur = cur - basisvec.scaled(t.coeff);
                                progressed = true;
                                break;
                            }
                        }
                        if (!progressed)
                            throw error("minimal_generators_degrees: vector outside I_d span");
                    }
                    span.insert(std::move(coords));
                }
            }
            int fresh = dim_Id - span.rank();
            for (int k = 0; k < fresh; ++k) out.push_back(d);
        }
        prev_ideal_mons = std::move(ideal_mons);
    }
    return out;
}

inline int mu_homogeneous(const IdealPresentation& I) {
    return static_cast<int>(minimal_generators_degrees(I).size());
}

// ---- Quadraticity --------------------------------------------------------

struct QuadraticityResult {
    bool quadratic = false;
    bool prefilter_refuted = false;   // fast necessary-condition refutation
    std::vector<int> degrees;         // minimal generator degrees of I* (if computed)
};

/// Necessary conditions for I_H* to be generated by quadrics:
/// (a) a_1 divides a_k + a_l for some k,l >= 2;
/// (b) 2 a_i lies in the monoid of the other generators for every i >= 2.
inline bool quadratic_prefilter(const NumericalSemigroup& H) {
    const auto& a = H.generators();
    int n = H.embdim();
    if (n < 2) return true;
    bool cond_a = false;
    for (int k = 1; k < n && !cond_a; ++k)
        for (int l = k; l < n; ++l)
            if ((a[k] + a[l]) % a[0] == 0) { cond_a = true; break; }
    if (!cond_a) return false;
    CriticalExponents ce = critical_exponents(H);
    for (int i = 1; i < n; ++i)
        if (ce.c[i] > 2) return false;
    return true;
}

inline QuadraticityResult is_quadratic(const NumericalSemigroup& H,
                                       const IdealPresentation* Istar = nullptr,
                                       uint32_t p = kDefaultPrime) {
    QuadraticityResult r;
    if (H.is_natural_numbers()) {
        r.quadratic = true;
        return r;
    }
    if (Istar == nullptr && !quadratic_prefilter(H)) {
        r.prefilter_refuted = true;
        return r;
    }
    IdealPresentation computed = Istar ? *Istar : tangent_cone_ideal(H, p);
    r.degrees = minimal_generators_degrees(computed);
    r.quadratic = true;
    for (int d : r.degrees)
        if (d != 2) r.quadratic = false;
    if (r.degrees.empty()) r.quadratic = true; // zero ideal
    return r;
}

// ---- G-quadratic permutation search --------------------------------------

/// Searches all variable permutations with degrevlex and lex for an order
/// whose reduced Groebner basis of Istar consists of quadrics. Absence of a
/// witness does not refute G-quadraticity (coordinate changes unexplored).
inline std::optional<TermOrder> g_quadratic_permutation_search(
    const IdealPresentation& Istar, int perm_limit = 8) {
    int n = Istar.nvars();
    if (n > perm_limit)
        throw embdim_too_large("g_quadratic_permutation_search: embdim exceeds permutation guard");
    if (Istar.is_zero_ideal()) return TermOrder::degrevlex(n);
    std::vector<int> perm = TermOrder::identity(n);
    do {
        for (OrderKind kind : {OrderKind::DegRevLex, OrderKind::Lex}) {
            TermOrder ord = TermOrder::with_perm(n, perm, kind);
            bool quad = true;
            for (auto& g : Istar.groebner_basis(ord))
                if (g.degree() > 2) { quad = false; break; }
            if (quad) return ord;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// ---- CI / almost-CI / CM -------------------------------------------------

enum class CIClass { CI, AlmostCI, Other };

inline CIClass classify_mu(int mu, int n) {
    if (mu == n - 1) return CIClass::CI;
    if (mu == n) return CIClass::AlmostCI;
    return CIClass::Other;
}

inline bool is_complete_intersection(const NumericalSemigroup& H,
                                     uint32_t p = kDefaultPrime) {
    if (H.is_natural_numbers()) return true;
    IdealPresentation I = toric_ideal(H, p);
    return mu_toric(I, H.generators()) == H.embdim() - 1;
}

inline bool is_almost_complete_intersection(const NumericalSemigroup& H,
                                            uint32_t p = kDefaultPrime) {
    if (H.is_natural_numbers()) return false;
    IdealPresentation I = toric_ideal(H, p);
    return mu_toric(I, H.generators()) == H.embdim();
}

inline CIClass classify_ci_star(const IdealPresentation& Istar) {
    return classify_mu(mu_homogeneous(Istar), Istar.nvars());
}

/// gr_m K[H] is Cohen-Macaulay iff x_1 (the multiplicity variable) is a
/// nonzerodivisor on S/I*, i.e. (I* : x_1) = I*.
inline bool is_tangent_cone_cm(const IdealPresentation& Istar) {
    IdealPresentation quot(Istar.nvars(), Istar.prime(),
                           ideal_quotient_by_variable(Istar, 0));
    return quot.equals(Istar);
}

// ---- Lifting criterion ----------------------------------------------------

/// Mod-x1 lifting check: candidates generate I, their x1 -> 0 images are
/// homogeneous of the same degree as the candidate's initial degree, and the
/// images generate the image ideal (I + (x1)) cap K[x2..xn]. A true answer
/// certifies that the candidates form a standard basis of I with x1 regular
/// on S/I*.
inline bool lifting_criterion_check(const IdealPresentation& I,
                                    const std::vector<Poly>& candidates) {
    int n = I.nvars();
    uint32_t p = I.prime();
    IdealPresentation C(n, p, candidates);
    if (!C.equals(I)) return false;
    std::vector<Poly> images;
    for (auto& f : candidates) {
        if (f.is_zero()) return false;
        std::vector<Term<Fp>> ts;
        for (auto& t : f.terms())
            if (t.mono.e[0] == 0) ts.push_back(t);
        Poly img = Poly::from_terms(n, std::move(ts));
        if (img.is_zero() || !img.is_homogeneous()) return false;
        if (img.degree() != f.initial_degree()) return false;
        images.push_back(img);
    }
    // Image ideal of I under x1 -> 0: eliminate nothing, just reduce modulo
    // x1 -- generators are (I + (x1)) with x1-free part extracted.
    std::vector<Poly> ext = I.generators();
    ext.push_back(Poly::monomial(n, Fp::one(p), Monomial::var(0, n)));
    std::vector<Poly> image_gens = eliminate(ext, n, {0});
    std::vector<Poly> images_ext = images;
    IdealPresentation Im(n, p, image_gens), Cand(n, p, images_ext);
    return Im.equals(Cand);
}

// ---- Multiplicity bounds --------------------------------------------------

enum class BoundStatus { Satisfied, Violated, NotApplicable };

struct BoundStatement {
    std::string name;
    BoundStatus status;
    std::string detail;
};

struct MultiplicityBoundReport {
    long e = 0;
    int n = 0;
    bool quadratic = false;
    std::vector<BoundStatement> statements;
    bool any_violation() const {
        for (auto& s : statements)
            if (s.status == BoundStatus::Violated) return true;
        return false;
    }
};

inline MultiplicityBoundReport multiplicity_bound_report(
    const NumericalSemigroup& H, uint32_t p = kDefaultPrime) {
    MultiplicityBoundReport rep;
    rep.e = H.multiplicity();
    rep.n = H.embdim();
    long n = rep.n, e = rep.e;
    QuadraticityResult q = is_quadratic(H, nullptr, p);
    rep.quadratic = q.quadratic;
    auto status = [&](bool applicable, bool ok) {
        return !applicable ? BoundStatus::NotApplicable
                           : (ok ? BoundStatus::Satisfied : BoundStatus::Violated);
    };
    long two_nm1 = n >= 1 ? (1L << (n - 1)) : 1;
    rep.statements.push_back(
        {"quadratic range n <= e <= 2^(n-1)",
         status(q.quadratic, e >= n && e <= two_nm1),
         "e=" + std::to_string(e) + ", n=" + std::to_string(n)});
    rep.statements.push_back(
        {"minimal multiplicity (linear resolution branch)",
         status(q.quadratic && e == n, true), e == n ? "e = n" : "e != n"});
    bool ci = q.quadratic && e == two_nm1 ? is_complete_intersection(H, p) : false;
    rep.statements.push_back(
        {"e = 2^(n-1) forces complete intersection",
         status(q.quadratic && e == two_nm1, ci), ""});
    if (q.quadratic && n >= 3) {
        IdealPresentation Istar = tangent_cone_ideal(H, p);
        bool cm = is_tangent_cone_cm(Istar);
        bool is_ci_star = classify_ci_star(Istar) == CIClass::CI;
        long forbidden = two_nm1 - (1L << (n - 3));
        rep.statements.push_back(
            {"CM non-CI forbidden range e <= 2^(n-1)-2^(n-3)",
             status(cm && !is_ci_star, e <= forbidden),
             "e=" + std::to_string(e) + ", bound=" + std::to_string(forbidden)});
    } else {
        rep.statements.push_back({"CM non-CI forbidden range e <= 2^(n-1)-2^(n-3)",
                                  BoundStatus::NotApplicable, ""});
    }
    return rep;
}

} // namespace nsgp
