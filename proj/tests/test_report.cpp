#include <catch_amalgamated.hpp>

#include <set>

#include "nsgp/report.hpp"

using namespace nsgp;

TEST_CASE("order and class names render stably") {
    REQUIRE(order_str(TermOrder::degrevlex(3)) == "degrevlex(x1>x2>x3)");
    REQUIRE(order_str(TermOrder::with_perm(3, {2, 0, 1}, OrderKind::Lex)) ==
            "lex(x3>x1>x2)");
    REQUIRE(ci_class_str(CIClass::CI) == "complete-intersection");
    REQUIRE(ci_class_str(CIClass::AlmostCI) == "almost-complete-intersection");
    REQUIRE(ci_class_str(CIClass::Other) == "other");
}

TEST_CASE("analysis of the natural numbers") {
    auto r = analyze_semigroup({1});
    REQUIRE(r.n == 1);
    REQUIRE(r.quadratic);
    REQUIRE(r.koszul.status == KoszulStatus::KoszulCertified);
    REQUIRE(r.delorme_tree == "<1>");
    REQUIRE(r.quadratic_chain == std::vector<long>{});
}

TEST_CASE("analysis report fields are mutually consistent") {
    auto r = analyze_semigroup({4, 6, 7, 9});
    REQUIRE(r.generators == std::vector<long>{4, 6, 7, 9});
    REQUIRE(r.e == 4);
    REQUIRE(r.n == 4);
    REQUIRE(r.quadratic);
    REQUIRE(r.g_quadratic_witness.has_value());
    REQUIRE(r.initial_degrees == std::vector<int>(6, 2));
    REQUIRE(r.tangent_cone_cm);
    REQUIRE(r.koszul.status == KoszulStatus::KoszulCertified);
    REQUIRE(!r.bounds.any_violation());

    auto r2 = analyze_semigroup({6, 10, 15});
    REQUIRE(!r2.quadratic);
    REQUIRE(r2.g_quadratic_note == "not quadratic");
    REQUIRE(r2.ci_class == "complete-intersection");
    REQUIRE(r2.delorme_tree.has_value());
    REQUIRE(!r2.quadratic_chain.has_value()); // CI but not quadratic
    REQUIRE(r2.koszul.status == KoszulStatus::NotKoszul);
}

TEST_CASE("JSON serialization round-trips and is schema-stable") {
    AnalyzeOptions opt;
    auto r = analyze_semigroup({4, 6, 9}, opt);
    auto j = report_to_json(r, opt);
    // Round trip through the serialized text.
    auto parsed = nlohmann::ordered_json::parse(j.dump());
    REQUIRE(parsed == j);
    REQUIRE(parsed["schema_version"] == "1");
    REQUIRE(parsed["generators"] == std::vector<long>{4, 6, 9});
    REQUIRE(parsed["multiplicity"] == 4);
    REQUIRE(parsed["embdim"] == 3);
    REQUIRE(parsed["quadratic"] == true);
    REQUIRE(parsed["koszul"]["status"] == "koszul");
    REQUIRE(parsed["quadratic_gluing_chain"].size() == 2);
    REQUIRE(!parsed.contains("timings_ms")); // determinism by default
    // Timings appear only on request.
    AnalyzeOptions timed = opt;
    timed.with_timings = true;
    REQUIRE(report_to_json(r, timed).contains("timings_ms"));
}

TEST_CASE("repeated runs are byte-identical") {
    AnalyzeOptions opt;
    std::string first;
    for (int run = 0; run < 3; ++run) {
        auto r = analyze_semigroup({12, 14, 15, 16, 18, 19},
                                   {4, opt.band, opt.perm_limit, opt.field});
        std::string dumped = report_to_json(r, {4}).dump(2);
        std::string text = report_to_text(r, {4});
        if (run == 0)
            first = dumped + text;
        else
            REQUIRE(dumped + text == first);
    }
    REQUIRE(first.find("not-koszul") != std::string::npos);
    REQUIRE(first.find("betti_witness_i") != std::string::npos);
}

TEST_CASE("text report mentions the headline facts") {
    auto r = analyze_semigroup({3, 4, 5});
    std::string t = report_to_text(r);
    REQUIRE(t.find("H = <3,4,5>") != std::string::npos);
    REQUIRE(t.find("multiplicity e = 3") != std::string::npos);
    REQUIRE(t.find("quadratic: yes") != std::string::npos);
    REQUIRE(t.find("Koszul:") != std::string::npos);
}

TEST_CASE("gluing trees render") {
    auto tree = delorme_decompose(NumericalSemigroup::from_generators({4, 6, 9}));
    REQUIRE(tree.has_value());
    std::string s = render_gluing_tree(**tree);
    REQUIRE(s == "glue(3*glue(2*<1>, 3), 4)");
    // The rendered tree recomposes to the semigroup itself.
    REQUIRE((*tree)->semigroup().generators() == std::vector<long>{4, 6, 9});
}

TEST_CASE("enumeration is deterministic, minimal, and duplicate-free") {
    std::vector<std::vector<long>> first, second;
    enumerate_semigroups(3, 12, [&](const std::vector<long>& g) { first.push_back(g); });
    enumerate_semigroups(3, 12, [&](const std::vector<long>& g) { second.push_back(g); });
    REQUIRE(first == second);
    REQUIRE(first.size() == 91);
    std::set<std::vector<long>> seen;
    for (auto& g : first) {
        REQUIRE(seen.insert(g).second); // no duplicates
        REQUIRE(g.size() >= 2);
        auto H = NumericalSemigroup::from_generators(g);
        REQUIRE(H.generators() == g); // already a minimal generating set
        REQUIRE(g.back() <= 12);
    }
    // Lexicographic order of the sorted tuples.
    for (size_t i = 1; i < first.size(); ++i) REQUIRE(first[i - 1] < first[i]);
}
