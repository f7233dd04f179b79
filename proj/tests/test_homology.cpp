#include <catch_amalgamated.hpp>

#include "nsgp/homology.hpp"
#include "nsgp/tangent_cone.hpp"

using namespace nsgp;

namespace {
const uint32_t P = kDefaultPrime;
}

TEST_CASE("Koszul complex over the polynomial ring") {
    // R = S (zero ideal): the residue field resolves by the Koszul complex,
    // so beta_{i,i} = C(n, i) and nothing off the diagonal.
    IdealPresentation zero(3, P, {});
    BettiTable t = betti_table_over_quotient(zero, 3, 2);
    long binom[4] = {1, 3, 3, 1};
    for (int i = 0; i <= 3; ++i) {
        REQUIRE(t.entry(i, i) == binom[i]);
        REQUIRE(t.total(i) == binom[i]);
    }
    REQUIRE(!t.first_offdiagonal());
}

TEST_CASE("quadric hypersurface is Koszul with constant Betti numbers") {
    // R = K[x,y]/(xy): the Poincare series is (1+t)^2/(1-t^2) = (1+t)/(1-t),
    // so beta_i(K) = 2 for every i >= 1, all on the diagonal.
    IdealPresentation I(2, P, {parse_poly("x1*x2", 2, P)});
    BettiTable t = betti_table_over_quotient(I, 4, 2);
    REQUIRE(!t.first_offdiagonal());
    for (int i = 1; i <= 4; ++i) REQUIRE(t.entry(i, i) == 2);
}

TEST_CASE("G-quadratic tangent cone has a clean diagonal") {
    auto H = NumericalSemigroup::from_generators({4, 6, 7, 9});
    IdealPresentation Istar = tangent_cone_ideal(H, P);
    BettiTable t = betti_table_over_quotient(Istar, 5, 2);
    REQUIRE(!t.first_offdiagonal());
    REQUIRE(t.entry(1, 1) == 4); // the four variables
}

TEST_CASE("flagship counterexample has beta_{4,5} = 1") {
    auto H = NumericalSemigroup::from_generators({12, 14, 15, 16, 18, 19});
    IdealPresentation Istar = tangent_cone_ideal(H, P);
    REQUIRE(is_quadratic(H, &Istar, P).quadratic);
    BettiTable t = betti_table_over_quotient(Istar, 4, 2);
    REQUIRE(t.entry(4, 5) == 1);
    REQUIRE(t.first_offdiagonal() == std::make_pair(4, 5));
    // Diagonal prefix.
    REQUIRE(t.entry(0, 0) == 1);
    REQUIRE(t.entry(1, 1) == 6);
    REQUIRE(t.total(2) == 24);
    REQUIRE(t.total(3) == 84);
    REQUIRE(t.total(4) == 277);
}

TEST_CASE("second Betti numbers see the minimal generators of the ideal") {
    // beta_{2,j}(K) over R = S/I equals the number of degree-j minimal
    // generators of I for j > 2.
    auto H = NumericalSemigroup::from_generators({7, 8, 20});
    IdealPresentation Istar = tangent_cone_ideal(H, P);
    auto degs = minimal_generators_degrees(Istar); // {2, 2, 5, 7}
    BettiTable t = betti_table_over_quotient(Istar, 2, 6);
    REQUIRE(t.entry(2, 5) == 1);
    REQUIRE(t.entry(2, 7) == 1);
    REQUIRE(t.entry(2, 6) == 0);
    // In degree 2 the Koszul relations C(n,2) add to the generator count.
    REQUIRE(t.entry(2, 2) == 2 + 3);
    REQUIRE(degs == std::vector<int>{2, 2, 5, 7});
}

TEST_CASE("window guard") {
    IdealPresentation zero(2, P, {});
    BettiTable t = betti_table_over_quotient(zero, 2, 1);
    REQUIRE_THROWS_AS(t.entry(3, 3), band_too_small);
    REQUIRE_THROWS_AS(t.entry(1, 99), band_too_small);
    REQUIRE(t.entry(1, 1) == 2);
}

TEST_CASE("early stop on first off-diagonal entry") {
    auto H = NumericalSemigroup::from_generators({12, 14, 15, 16, 18, 19});
    IdealPresentation Istar = tangent_cone_ideal(H, P);
    BettiTable t = betti_table_over_quotient(Istar, 6, 2, true);
    REQUIRE(t.cutoff_i == 4); // stops as soon as beta_{4,5} appears
    REQUIRE(t.first_offdiagonal() == std::make_pair(4, 5));
}

TEST_CASE("rendered table mentions every computed total") {
    IdealPresentation zero(2, P, {});
    BettiTable t = betti_table_over_quotient(zero, 2, 1);
    std::string s = t.render_text();
    REQUIRE(s.find("total") != std::string::npos);
    REQUIRE(s.find("2") != std::string::npos);
}

TEST_CASE("non-homogeneous input is rejected") {
    IdealPresentation bad(2, P, {parse_poly("x1^2-x2", 2, P)});
    REQUIRE_THROWS_AS(betti_table_over_quotient(bad, 2, 1), non_homogeneous_input);
}
