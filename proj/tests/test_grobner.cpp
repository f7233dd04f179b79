#include <catch_amalgamated.hpp>

#include <random>
#include <functional>

#include "nsgp/grobner.hpp"

using namespace nsgp;

namespace {

const uint32_t P = kDefaultPrime;

std::vector<Poly> gens(std::initializer_list<const char*> srcs, int nvars) {
    std::vector<Poly> out;
    for (auto* s : srcs) out.push_back(parse_poly(s, nvars, P));
    return out;
}

void check_reduced_gb(const std::vector<Poly>& G, const TermOrder& ord) {
    for (size_t i = 0; i < G.size(); ++i) {
        // Monic.
        REQUIRE(G[i].leading_term(ord).coeff.v == 1u);
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            // No leading monomial divides another, and tails are reduced.
            for (auto& t : G[i].terms())
                REQUIRE(!G[j].leading_monomial(ord).divides(t.mono));
        }
    }
    // Every S-polynomial reduces to zero.
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j)
            REQUIRE(normal_form(s_polynomial(G[i], G[j], ord), G, ord).is_zero());
    // Ascending by leading monomial.
    for (size_t i = 0; i + 1 < G.size(); ++i)
        REQUIRE(ord.less(G[i].leading_monomial(ord), G[i + 1].leading_monomial(ord)));
}

} // namespace

TEST_CASE("textbook Groebner basis") {
    TermOrder ord = TermOrder::lex(2);
    // (x^2 - y, x^3 - x) under lex x > y: the reduced basis introduces y-only
    // relations.
    auto G = buchberger(gens({"x1^2-x2", "x1^3-x1"}, 2), ord);
    check_reduced_gb(G, ord);
    IdealPresentation I(2, P, gens({"x1^2-x2", "x1^3-x1"}, 2));
    REQUIRE(I.contains(parse_poly("x2^2-x2", 2, P))); // y^2 = y in the quotient
}

TEST_CASE("reduced basis is canonical under generator shuffling") {
    std::mt19937 rng(5);
    auto base = gens({"x1^2-x2*x3", "x2^2-x1*x3", "x3^2-x1*x2", "x1*x2-x3"}, 3);
    TermOrder ord = TermOrder::degrevlex(3);
    auto ref = buchberger(base, ord);
    check_reduced_gb(ref, ord);
    for (int trial = 0; trial < 6; ++trial) {
        auto shuffled = base;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        // Also rescale generators: the reduced GB must not change.
        for (size_t k = 0; k < shuffled.size(); ++k)
            shuffled[k] = shuffled[k].scaled(Fp(static_cast<long long>(2 + k + trial), P));
        REQUIRE(buchberger(shuffled, ord) == ref);
    }
}

TEST_CASE("normal form properties") {
    TermOrder ord = TermOrder::degrevlex(3);
    IdealPresentation I(3, P, gens({"x1^2-x2*x3", "x2^3-x3^2"}, 3));
    const auto& G = I.groebner_basis(ord);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Term<Fp>> ts;
        for (int t = 0; t < 4; ++t) {
            Monomial m(3);
            for (int v = 0; v < 3; ++v) m.e[v] = d(rng);
            ts.push_back({Fp(1 + d(rng), P), m});
        }
        Poly f = Poly::from_terms(3, ts);
        Poly nf = normal_form(f, G, ord);
        // Idempotent, a member-shift away from f, and fully reduced.
        REQUIRE(normal_form(nf, G, ord) == nf);
        REQUIRE(I.contains(f - nf));
        for (auto& t : nf.terms())
            for (auto& g : G) REQUIRE(!g.leading_monomial(ord).divides(t.mono));
    }
}

TEST_CASE("zero and unit ideals") {
    TermOrder ord = TermOrder::degrevlex(2);
    REQUIRE(buchberger(std::vector<Poly>{}, ord).empty());
    auto G = buchberger(gens({"x1", "x1-1"}, 2), ord);
    REQUIRE(G.size() == 1);
    REQUIRE(G[0] == parse_poly("1", 2, P));
}

TEST_CASE("elimination computes intersections") {
    // I = (x1 - x3^2, x2 - x3^3): eliminating x3 leaves the twisted cubic's
    // plane projection x1^3 - x2^2.
    auto G = eliminate(gens({"x1-x3^2", "x2-x3^3"}, 3), 3, {2});
    IdealPresentation J(2, P, restrict_to_vars(G, 3, {0, 1}));
    IdealPresentation expected(2, P, gens({"x1^3-x2^2"}, 2));
    REQUIRE(J.equals(expected));
}

TEST_CASE("quotient by a variable on homogeneous ideals") {
    // I = (x1^2, x1*x2) : x2 = (x1).
    IdealPresentation I(2, P, gens({"x1^2", "x1*x2"}, 2));
    IdealPresentation Q(2, P, ideal_quotient_by_variable(I, 1));
    REQUIRE(Q.equals(IdealPresentation(2, P, gens({"x1"}, 2))));
    // Saturated ideals are fixed points.
    IdealPresentation S(2, P, gens({"x1"}, 2));
    IdealPresentation QS(2, P, ideal_quotient_by_variable(S, 1));
    REQUIRE(QS.equals(S));
    // Non-homogeneous input is rejected.
    IdealPresentation bad(2, P, gens({"x1^2-x2"}, 2));
    REQUIRE_THROWS_AS(ideal_quotient_by_variable(bad, 1), non_homogeneous_input);
}

TEST_CASE("Hilbert series of monomial quotients") {
    // S = K[x,y], I = (x^2, xy): dimension 1, multiplicity 1,
    // Hilbert function 1, 2, 1, 1, 1, ...
    IdealPresentation I(2, P, gens({"x1^2", "x1*x2"}, 2));
    HilbertSeries hs = quotient_hilbert_series(I);
    REQUIRE(hs.dimension == 1);
    REQUIRE(hs.multiplicity == 1);
    REQUIRE(quotient_hilbert_function(I, 0) == 1);
    REQUIRE(quotient_hilbert_function(I, 1) == 2);
    REQUIRE(quotient_hilbert_function(I, 2) == 1);
    REQUIRE(quotient_hilbert_function(I, 7) == 1);
}

TEST_CASE("Hilbert series of the full polynomial ring") {
    IdealPresentation I(3, P, {});
    HilbertSeries hs = quotient_hilbert_series(I);
    REQUIRE(hs.dimension == 3);
    REQUIRE(hs.multiplicity == 1);
    // Binomial coefficients C(d+2, 2).
    REQUIRE(quotient_hilbert_function(I, 0) == 1);
    REQUIRE(quotient_hilbert_function(I, 1) == 3);
    REQUIRE(quotient_hilbert_function(I, 4) == 15);
}

TEST_CASE("Hilbert function agrees with a direct standard-monomial count") {
    IdealPresentation I(3, P, gens({"x1*x2-x3^2", "x1^3"}, 3));
    TermOrder ord = TermOrder::degrevlex(3);
    auto lts = I.leading_monomials(ord);
    for (int d = 0; d <= 8; ++d) {
        long direct = 0;
        // Count degree-d monomials outside the leading-term ideal.
        std::function<void(int, int, Monomial&)> rec = [&](int v, int left, Monomial& m) {
            if (v == 2) {
                m.e[2] = left;
                bool in_lt = false;
                for (auto& l : lts)
                    if (l.divides(m)) in_lt = true;
                if (!in_lt) ++direct;
                m.e[2] = 0;
                return;
            }
            for (int e = 0; e <= left; ++e) {
                m.e[v] = e;
                rec(v + 1, left - e, m);
                m.e[v] = 0;
            }
        };
        Monomial m(3);
        rec(0, d, m);
        REQUIRE(quotient_hilbert_function(I, d) == direct);
    }
}

TEST_CASE("graded minimal generator degrees via Nakayama") {
    // (x^2, xy, y^3): three minimal generators in degrees 2, 2, 3.
    IdealPresentation I(2, P, gens({"x1^2", "x1*x2", "x2^3"}, 2));
    REQUIRE(I.is_homogeneous());
    // x1^2*x2 is not a minimal generator even though it lies in the ideal.
    IdealPresentation J(2, P, gens({"x1^2", "x1*x2", "x2^3", "x1^2*x2"}, 2));
    REQUIRE(I.equals(J));
}

TEST_CASE("max Groebner degree and leading monomials") {
    IdealPresentation I(2, P, gens({"x1^2-x2^2", "x1*x2^2"}, 2));
    TermOrder ord = TermOrder::degrevlex(2);
    auto lts = I.leading_monomials(ord);
    REQUIRE(!lts.empty());
    REQUIRE(I.max_groebner_degree() >= 2);
    for (auto& g : I.groebner_basis(ord))
        REQUIRE(g.degree() <= I.max_groebner_degree());
}
