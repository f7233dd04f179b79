#include <catch_amalgamated.hpp>

#include "nsgp/toric.hpp"

using namespace nsgp;

namespace {
const uint32_t P = kDefaultPrime;
}

TEST_CASE("toric ideal of a 2-generated semigroup") {
    auto H = NumericalSemigroup::from_generators({3, 5});
    IdealPresentation I = toric_ideal(H, P);
    IdealPresentation expected(2, P, {parse_poly("x1^5-x2^3", 2, P)});
    REQUIRE(I.equals(expected));
    REQUIRE(mu_toric(I, H.generators()) == 1);
}

TEST_CASE("toric ideal of <3,4,5>") {
    auto H = NumericalSemigroup::from_generators({3, 4, 5});
    IdealPresentation I = toric_ideal(H, P);
    IdealPresentation expected(
        3, P,
        parse_polys({"x1^3-x2*x3", "x2^2-x1*x3", "x3^2-x1^2*x2"}, 3, P));
    REQUIRE(I.equals(expected));
    REQUIRE(mu_toric(I, H.generators()) == 3);
}

TEST_CASE("toric generators are pure-difference binomials vanishing on H") {
    for (auto gens : std::vector<std::vector<long>>{
             {4, 6, 7}, {7, 8, 20}, {5, 6, 7, 9}, {10, 12, 18, 21, 27}}) {
        auto H = NumericalSemigroup::from_generators(gens);
        IdealPresentation I = toric_ideal(H, P);
        TermOrder ord = TermOrder::degrevlex(H.embdim());
        for (auto& g : I.groebner_basis(ord)) {
            REQUIRE(g.terms().size() == 2);
            REQUIRE(g.terms()[0].coeff.v == 1u);
            REQUIRE((-g.terms()[1].coeff).v == 1u);
            REQUIRE(g.terms()[0].mono.coprime_with(g.terms()[1].mono));
            REQUIRE(substitute_powers(g, H.generators()).empty());
        }
        for (auto& g : minimal_binomial_generators(I, H.generators())) {
            REQUIRE(g.terms().size() == 2);
            REQUIRE(substitute_powers(g, H.generators()).empty());
        }
    }
}

TEST_CASE("semigroup degree grading") {
    std::vector<long> a{4, 6, 7};
    Monomial m = Monomial::var(0, 3, 2) * Monomial::var(2, 3); // x1^2 x3
    REQUIRE(semigroup_degree(m, a) == 15);
}

TEST_CASE("variable order matters for the presentation") {
    std::vector<long> ordered{12, 18, 21, 27, 10};
    IdealPresentation I = toric_ideal_ordered(ordered, P);
    // Same ideal up to relabeling as the sorted presentation, but not equal
    // as a subideal of the same ring.
    auto H = NumericalSemigroup::from_generators(ordered);
    IdealPresentation J = toric_ideal(H, P);
    TermOrder ord = TermOrder::degrevlex(5);
    for (auto& g : I.groebner_basis(ord))
        REQUIRE(substitute_powers(g, ordered).empty());
    REQUIRE(I.groebner_basis(ord).size() == J.groebner_basis(ord).size());
}

TEST_CASE("minimal binomial generators match known counts") {
    // Complete intersection <6,10,15>: exactly 2 = n-1 generators.
    auto H = NumericalSemigroup::from_generators({6, 10, 15});
    IdealPresentation I = toric_ideal(H, P);
    auto mins = minimal_binomial_generators(I, H.generators());
    REQUIRE(mins.size() == 2);
    // The flagship counterexample needs 9.
    auto H2 = NumericalSemigroup::from_generators({12, 14, 15, 16, 18, 19});
    REQUIRE(mu_toric(toric_ideal(H2, P), H2.generators()) == 9);
}

TEST_CASE("minimal generators actually generate") {
    for (auto gens : std::vector<std::vector<long>>{{4, 6, 7}, {5, 6, 7, 9}}) {
        auto H = NumericalSemigroup::from_generators(gens);
        IdealPresentation I = toric_ideal(H, P);
        IdealPresentation M(H.embdim(), P,
                            minimal_binomial_generators(I, H.generators()));
        REQUIRE(M.equals(I));
    }
}

TEST_CASE("critical exponents") {
    auto H = NumericalSemigroup::from_generators({3, 5});
    auto ce = critical_exponents(H);
    REQUIRE(ce.c == std::vector<long>{5, 3});
    // c_i is minimal: c_i * a_i in <other generators>, no smaller multiple.
    auto H2 = NumericalSemigroup::from_generators({4, 6, 7});
    auto ce2 = critical_exponents(H2);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(ce2.c[i] >= 2);
        REQUIRE(semigroup_degree(ce2.witness[i], H2.generators()) ==
                ce2.c[i] * H2.generators()[i]);
        REQUIRE(ce2.witness[i].e[i] == 0);
    }
    REQUIRE_THROWS_AS(
        critical_exponents(NumericalSemigroup::from_generators({1})),
        invalid_input);
}

TEST_CASE("critical binomials vanish on the semigroup") {
    auto H = NumericalSemigroup::from_generators({5, 11, 13, 12});
    for (auto& f : critical_binomials(H, P)) {
        REQUIRE(f.terms().size() == 2);
        REQUIRE(substitute_powers(f, H.generators()).empty());
    }
}

TEST_CASE("normalized binomials are canonical") {
    Poly f = parse_poly("x1*x2^2-x1*x3", 3, P).scaled(Fp(7, P));
    Poly g = normalize_binomial(f);
    // Common factor removed, monic.
    REQUIRE(g == parse_poly("x2^2-x3", 3, P));
}
