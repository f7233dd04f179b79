#include <catch_amalgamated.hpp>

#include "nsgp/semigroup.hpp"

using namespace nsgp;

TEST_CASE("generator minimalization") {
    auto H = NumericalSemigroup::from_generators({6, 10, 15, 16, 21, 31});
    // 16 = 6+10, 21 = 6+15, 31 = 6+10+15 are redundant.
    REQUIRE(H.generators() == std::vector<long>{6, 10, 15});
    REQUIRE(H.embdim() == 3);
    REQUIRE(H.multiplicity() == 6);
}

TEST_CASE("invalid generator input") {
    REQUIRE_THROWS_AS(NumericalSemigroup::from_generators({}), invalid_input);
    REQUIRE_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), invalid_input);
    REQUIRE_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), invalid_input);
    REQUIRE_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), invalid_input);
}

TEST_CASE("natural numbers") {
    auto N = NumericalSemigroup::from_generators({1});
    REQUIRE(N.is_natural_numbers());
    REQUIRE(N.frobenius_number() == -1);
    REQUIRE(N.gaps().empty());
    REQUIRE(N.multiplicity() == 1);
    REQUIRE(N.order_of(7) == 7);
}

TEST_CASE("membership and Frobenius for <3,5>") {
    auto H = NumericalSemigroup::from_generators({3, 5});
    REQUIRE(H.frobenius_number() == 7); // Sylvester: 3*5-3-5
    REQUIRE(H.gaps() == std::vector<long>{1, 2, 4, 7});
    REQUIRE(H.contains(0));
    REQUIRE(!H.contains(7));
    REQUIRE(H.contains(8));
    REQUIRE(!H.contains(-3));
}

TEST_CASE("two-generator Frobenius law holds on a grid") {
    for (long a = 2; a <= 9; ++a)
        for (long b = a + 1; b <= 15; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto H = NumericalSemigroup::from_generators({a, b});
            REQUIRE(H.frobenius_number() == a * b - a - b);
            REQUIRE(static_cast<long>(H.gaps().size()) == (a - 1) * (b - 1) / 2);
        }
}

TEST_CASE("Apery set of <4,6,7>") {
    auto H = NumericalSemigroup::from_generators({4, 6, 7});
    // Smallest elements in each class mod 4.
    REQUIRE(H.apery_set(H.multiplicity()) == std::vector<long>{0, 13, 6, 7});
}

TEST_CASE("Apery set structure is generic") {
    for (auto gens : std::vector<std::vector<long>>{{5, 7, 9}, {7, 8, 20}, {4, 9, 11}}) {
        auto H = NumericalSemigroup::from_generators(gens);
        auto ap = H.apery_set(H.multiplicity());
        long e = H.multiplicity();
        REQUIRE(static_cast<long>(ap.size()) == e);
        for (long r = 0; r < e; ++r) {
            REQUIRE(ap[r] % e == r);
            REQUIRE(H.contains(ap[r]));
            if (ap[r] >= e) REQUIRE(!H.contains(ap[r] - e));
        }
    }
}

TEST_CASE("pseudo-Frobenius and symmetry classes") {
    auto sym = NumericalSemigroup::from_generators({3, 5}); // 2-generated: symmetric
    REQUIRE(sym.pseudo_frobenius() == std::vector<long>{7});
    REQUIRE(sym.is_symmetric());
    REQUIRE(!sym.is_pseudo_symmetric());

    auto psym = NumericalSemigroup::from_generators({3, 4, 5});
    REQUIRE(psym.pseudo_frobenius() == std::vector<long>{1, 2});
    REQUIRE(psym.is_pseudo_symmetric());
    REQUIRE(!psym.is_symmetric());

    auto neither = NumericalSemigroup::from_generators({5, 6, 7, 9});
    REQUIRE(neither.is_pseudo_symmetric());
    auto other = NumericalSemigroup::from_generators({10, 12, 18, 21, 27});
    REQUIRE(!other.is_symmetric());
    REQUIRE(!other.is_pseudo_symmetric());
}

TEST_CASE("symmetric iff gaps pair with semigroup elements") {
    for (auto gens : std::vector<std::vector<long>>{
             {3, 5}, {4, 6, 7}, {3, 4, 5}, {5, 11, 13, 12}, {7, 8, 20}}) {
        auto H = NumericalSemigroup::from_generators(gens);
        long F = H.frobenius_number();
        bool mirror = true;
        for (long x = 0; x <= F; ++x)
            if (H.contains(x) == H.contains(F - x)) mirror = false;
        REQUIRE(H.is_symmetric() == mirror);
    }
}

TEST_CASE("maximal representation length ord_H") {
    auto H = NumericalSemigroup::from_generators({3, 5});
    REQUIRE(H.order_of(0) == 0);
    REQUIRE(H.order_of(15) == 5);   // 5*3 beats 3*5
    REQUIRE(H.order_of(8) == 2);    // 3+5
    REQUIRE_THROWS_AS(H.order_of(7), not_in_semigroup);
    REQUIRE_THROWS_AS(H.order_of(-1), not_in_semigroup);
}

TEST_CASE("ord is superadditive and hits generators at 1") {
    auto H = NumericalSemigroup::from_generators({7, 8, 20});
    for (long g : H.generators()) REQUIRE(H.order_of(g) == 1);
    std::vector<long> elems;
    for (long x = 1; x <= 80; ++x)
        if (H.contains(x)) elems.push_back(x);
    for (size_t i = 0; i < elems.size(); i += 3)
        for (size_t j = 0; j < elems.size(); j += 5)
            REQUIRE(H.order_of(elems[i] + elems[j]) >=
                    H.order_of(elems[i]) + H.order_of(elems[j]));
}

TEST_CASE("Hilbert function of the associated graded ring counts by order") {
    auto H = NumericalSemigroup::from_generators({4, 6, 7});
    // Degree 0: just 0. Degree 1: elements of order exactly 1.
    REQUIRE(H.gr_hilbert_function(0) == 1);
    long count1 = 0;
    for (long x = 1; x <= 60; ++x)
        if (H.contains(x) && H.order_of(x) == 1) ++count1;
    REQUIRE(H.gr_hilbert_function(1) == count1);
    // Eventually constant equal to the multiplicity.
    int s = H.gr_hilbert_stabilization();
    REQUIRE(H.gr_hilbert_function(s) == H.multiplicity());
    REQUIRE(H.gr_hilbert_function(s + 3) == H.multiplicity());
}

TEST_CASE("Hilbert function values sum the semigroup layer cardinalities") {
    for (auto gens : std::vector<std::vector<long>>{{3, 7, 8}, {10, 11, 13}, {5, 6, 9}}) {
        auto H = NumericalSemigroup::from_generators(gens);
        int s = H.gr_hilbert_stabilization();
        long total = 0;
        for (int d = 0; d <= s; ++d) total += H.gr_hilbert_function(d);
        // Every element with ord <= s is counted exactly once.
        long direct = 0;
        for (long x = 0;; ++x) {
            if (!H.contains(x)) {
                if (x > H.frobenius_number() + 100) break;
                continue;
            }
            if (H.order_of(x) <= s) ++direct;
            if (x > (s + 2) * H.generators().back()) break;
        }
        REQUIRE(total <= direct); // stabilized layers are truncated consistently
        REQUIRE(H.gr_hilbert_function(s) == H.multiplicity());
    }
}
