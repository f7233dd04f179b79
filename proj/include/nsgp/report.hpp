#pragma once

#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nsgp/families.hpp"
#include "nsgp/koszul.hpp"

namespace nsgp {

constexpr const char* kReportSchemaVersion = "1";

struct AnalyzeOptions {
    int max_i = kDefaultMaxI;
    int band = kDefaultBand;
    int perm_limit = 8;
    uint32_t field = kDefaultPrime;
    bool with_timings = false; // timings break byte-identical output; opt in
};

struct AnalysisReport {
    std::vector<long> generators;
    long e = 1;
    int n = 1;
    long frobenius = -1;
    long genus = 0;
    std::vector<long> pseudo_frobenius;
    bool symmetric = false;
    bool pseudo_symmetric = false;

    std::vector<std::string> toric_generators;  // minimal binomial generators of I_H
    std::vector<std::string> initial_generators; // minimal generators of I_H*
    std::vector<int> initial_degrees;

    bool quadratic = false;
    std::optional<std::string> g_quadratic_witness;
    std::string g_quadratic_note;

    std::string ci_class;      // of I_H
    std::string ci_class_star; // of I_H*
    bool tangent_cone_cm = false;
    bool gr_gorenstein = false;

    MultiplicityBoundReport bounds;
    KoszulVerdict koszul;

    std::optional<std::string> delorme_tree; // rendered; present iff CI
    std::optional<std::vector<long>> quadratic_chain;

    std::vector<std::pair<std::string, double>> timings_ms;
};

inline std::string order_str(const TermOrder& ord) {
    std::string s = ord.kind == OrderKind::Lex ? "lex(" : "degrevlex(";
    for (size_t k = 0; k < ord.perm.size(); ++k) {
        if (k) s += ">";
        s += "x" + std::to_string(ord.perm[k] + 1);
    }
    return s + ")";
}

inline std::string ci_class_str(CIClass c) {
    switch (c) {
    case CIClass::CI: return "complete-intersection";
    case CIClass::AlmostCI: return "almost-complete-intersection";
    default: return "other";
    }
}

inline std::string render_gluing_tree(const GluingTree& t) {
    auto gens_str = [](const std::vector<long>& g) {
        std::string s = "<";
        for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
        return s + ">";
    };
    switch (t.kind) {
    case GluingTree::Kind::Leaf:
        return gens_str(t.gens);
    case GluingTree::Kind::SimpleGlue:
        return "glue(" + std::to_string(t.c) + "*" + render_gluing_tree(*t.child) +
               ", " + std::to_string(t.ell) + ")";
    default:
        return "glue(" + std::to_string(t.c1) + "*" + render_gluing_tree(*t.left) +
               ", " + std::to_string(t.c2) + "*" + render_gluing_tree(*t.right) + ")";
    }
}

inline AnalysisReport analyze_semigroup(const std::vector<long>& gens,
                                        const AnalyzeOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    AnalysisReport r;
    NumericalSemigroup H = NumericalSemigroup::from_generators(gens);
    auto lap = [&](const char* name) {
        auto t1 = clock::now();
        r.timings_ms.emplace_back(
            name, std::chrono::duration<double, std::milli>(t1 - t0).count());
        t0 = t1;
    };
    r.generators = H.generators();
    r.e = H.multiplicity();
    r.n = H.embdim();
    r.frobenius = H.frobenius_number();
    r.genus = static_cast<long>(H.gaps().size());
    r.pseudo_frobenius = H.pseudo_frobenius();
    r.symmetric = H.is_symmetric();
    r.pseudo_symmetric = H.is_pseudo_symmetric();
    lap("invariants");

    uint32_t p = opt.field;
    if (H.is_natural_numbers()) {
        r.quadratic = true;
        r.g_quadratic_witness = order_str(TermOrder::degrevlex(1));
        r.ci_class = "complete-intersection";
        r.ci_class_star = "complete-intersection";
        r.tangent_cone_cm = true;
        r.gr_gorenstein = true;
        r.bounds = multiplicity_bound_report(H, p);
        r.koszul = koszul_verdict(H, opt.max_i, opt.band, p);
        r.delorme_tree = "<1>";
        r.quadratic_chain = std::vector<long>{};
        lap("pipeline");
        return r;
    }

    IdealPresentation I = toric_ideal(H, p);
    for (auto& f : minimal_binomial_generators(I, H.generators()))
        r.toric_generators.push_back(f.str());
    r.ci_class = ci_class_str(classify_mu(mu_toric(I, H.generators()), r.n));
    lap("toric");

    IdealPresentation Istar = standard_basis(I, H).initial_ideal;
    for (auto& f : Istar.generators()) r.initial_generators.push_back(f.str());
    r.initial_degrees = minimal_generators_degrees(Istar);
    r.quadratic = true;
    for (int d : r.initial_degrees)
        if (d != 2) r.quadratic = false;
    r.ci_class_star = ci_class_str(classify_ci_star(Istar));
    r.tangent_cone_cm = is_tangent_cone_cm(Istar);
    r.gr_gorenstein = is_gr_gorenstein(Istar);
    lap("tangent-cone");

    if (!r.quadratic) {
        r.g_quadratic_note = "not quadratic";
    } else if (r.n > opt.perm_limit) {
        r.g_quadratic_note = "permutation search skipped: embdim exceeds limit";
    } else if (auto ord = g_quadratic_permutation_search(Istar, opt.perm_limit)) {
        r.g_quadratic_witness = order_str(*ord);
    } else {
        r.g_quadratic_note = "no quadratic Groebner basis among variable permutations";
    }
    lap("g-quadratic");

    r.bounds = multiplicity_bound_report(H, p);
    r.koszul = koszul_verdict(H, opt.max_i, opt.band, p);
    lap("koszul");

    if (auto tree = delorme_decompose(H)) {
        r.delorme_tree = render_gluing_tree(**tree);
        auto chain = quadratic_gluing_chain(H, p);
        if (chain.chain) r.quadratic_chain = *chain.chain;
    }
    lap("gluing");
    return r;
}

// ---- Serialization -----------------------------------------------------------

inline nlohmann::ordered_json report_to_json(const AnalysisReport& r,
                                             const AnalyzeOptions& opt = {}) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["field"] = opt.field;
    j["max_i"] = opt.max_i;
    j["band"] = opt.band;
    j["generators"] = r.generators;
    j["multiplicity"] = r.e;
    j["embdim"] = r.n;
    j["frobenius"] = r.frobenius;
    j["genus"] = r.genus;
    j["pseudo_frobenius"] = r.pseudo_frobenius;
    j["symmetric"] = r.symmetric;
    j["pseudo_symmetric"] = r.pseudo_symmetric;
    j["toric_generators"] = r.toric_generators;
    j["initial_ideal_generators"] = r.initial_generators;
    j["initial_ideal_degrees"] = r.initial_degrees;
    j["quadratic"] = r.quadratic;
    if (r.g_quadratic_witness)
        j["g_quadratic_witness"] = *r.g_quadratic_witness;
    else
        j["g_quadratic_note"] = r.g_quadratic_note;
    j["ci_class"] = r.ci_class;
    j["ci_class_initial"] = r.ci_class_star;
    j["tangent_cone_cohen_macaulay"] = r.tangent_cone_cm;
    j["gr_gorenstein"] = r.gr_gorenstein;
    nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
    for (auto& s : r.bounds.statements) {
        nlohmann::ordered_json b;
        b["name"] = s.name;
        b["status"] = s.status == BoundStatus::Satisfied    ? "satisfied"
                      : s.status == BoundStatus::Violated   ? "violated"
                                                            : "not-applicable";
        b["detail"] = s.detail;
        bounds.push_back(std::move(b));
    }
    j["multiplicity_bounds"] = std::move(bounds);
    nlohmann::ordered_json k;
    k["status"] = r.koszul.status == KoszulStatus::KoszulCertified ? "koszul"
                  : r.koszul.status == KoszulStatus::NotKoszul     ? "not-koszul"
                                                                   : "undecided";
    k["certificate"] = r.koszul.certificate_kind;
    if (r.koszul.witness_order) k["witness_order"] = order_str(*r.koszul.witness_order);
    if (r.koszul.betti_witness) {
        k["betti_witness_i"] = r.koszul.betti_witness->first;
        k["betti_witness_j"] = r.koszul.betti_witness->second;
        k["betti_witness_value"] = *r.koszul.betti_witness_value;
    }
    if (!r.koszul.gluing_chain.empty()) k["gluing_chain"] = r.koszul.gluing_chain;
    if (r.koszul.status == KoszulStatus::UndecidedUpTo)
        k["cutoff_i"] = r.koszul.cutoff_i;
    j["koszul"] = std::move(k);
    if (r.delorme_tree) j["delorme_tree"] = *r.delorme_tree;
    if (r.quadratic_chain) j["quadratic_gluing_chain"] = *r.quadratic_chain;
    if (opt.with_timings) {
        nlohmann::ordered_json t;
        for (auto& [name, ms] : r.timings_ms) t[name] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j;
}

inline std::string report_to_text(const AnalysisReport& r,
                                  const AnalyzeOptions& opt = {}) {
    std::ostringstream os;
    os << "H = <";
    for (size_t i = 0; i < r.generators.size(); ++i)
        os << (i ? "," : "") << r.generators[i];
    os << ">\n";
    os << "  multiplicity e = " << r.e << ", embdim n = " << r.n
       << ", Frobenius = " << r.frobenius << ", genus = " << r.genus << "\n";
    os << "  PF = {";
    for (size_t i = 0; i < r.pseudo_frobenius.size(); ++i)
        os << (i ? "," : "") << r.pseudo_frobenius[i];
    os << "}";
    if (r.symmetric) os << "  (symmetric)";
    if (r.pseudo_symmetric) os << "  (pseudo-symmetric)";
    os << "\n";
    os << "  I_H  = (";
    for (size_t i = 0; i < r.toric_generators.size(); ++i)
        os << (i ? ", " : "") << r.toric_generators[i];
    os << ")\n";
    os << "  I_H* = (";
    for (size_t i = 0; i < r.initial_generators.size(); ++i)
        os << (i ? ", " : "") << r.initial_generators[i];
    os << ")\n";
    os << "  quadratic: " << (r.quadratic ? "yes" : "no");
    if (r.g_quadratic_witness)
        os << ", G-quadratic witness: " << *r.g_quadratic_witness;
    else
        os << " (" << r.g_quadratic_note << ")";
    os << "\n";
    os << "  I_H: " << r.ci_class << "; I_H*: " << r.ci_class_star << "\n";
    os << "  tangent cone CM: " << (r.tangent_cone_cm ? "yes" : "no")
       << ", Gorenstein: " << (r.gr_gorenstein ? "yes" : "no") << "\n";
    for (auto& s : r.bounds.statements)
        os << "  bound [" << s.name << "]: "
           << (s.status == BoundStatus::Satisfied    ? "satisfied"
               : s.status == BoundStatus::Violated   ? "VIOLATED"
                                                     : "not applicable")
           << (s.detail.empty() ? "" : " (" + s.detail + ")") << "\n";
    os << "  Koszul: " << r.koszul.describe() << "\n";
    if (r.delorme_tree) os << "  Delorme: " << *r.delorme_tree << "\n";
    if (r.quadratic_chain) {
        os << "  quadratic gluing chain: [";
        for (size_t i = 0; i < r.quadratic_chain->size(); ++i)
            os << (i ? "," : "") << (*r.quadratic_chain)[i];
        os << "]\n";
    }
    if (opt.with_timings)
        for (auto& [name, ms] : r.timings_ms)
            os << "  time[" << name << "] = " << ms << " ms\n";
    return os.str();
}

// ---- Deterministic corpus enumeration ------------------------------------------

namespace detail {

inline bool in_monoid(long x, const std::vector<long>& gens) {
    std::vector<char> reach(static_cast<size_t>(x) + 1, 0);
    reach[0] = 1;
    for (long v = 1; v <= x; ++v)
        for (long g : gens)
            if (g <= v && reach[v - g]) { reach[v] = 1; break; }
    return reach[x] != 0;
}

inline void enumerate_rec(std::vector<long>& cur, long max_gen, int max_embdim,
                          const std::function<void(const std::vector<long>&)>& visit) {
    long g_all = 0;
    for (long v : cur) g_all = std::gcd(g_all, v);
    if (g_all == 1) visit(cur);
    if (static_cast<int>(cur.size()) == max_embdim) return;
    long lo = cur.empty() ? 2 : cur.back() + 1;
    for (long g = lo; g <= max_gen; ++g) {
        if (!cur.empty() && in_monoid(g, cur)) continue; // keeps the set minimal
        cur.push_back(g);
        enumerate_rec(cur, max_gen, max_embdim, visit);
        cur.pop_back();
    }
}

} // namespace detail

/// Visits every numerical semigroup with 2 <= embdim <= max_embdim and all
/// minimal generators <= max_gen, each exactly once, in lexicographic order
/// of the sorted generator tuple.
inline void enumerate_semigroups(int max_embdim, long max_gen,
                                 const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> cur;
    auto filtered = [&](const std::vector<long>& g) {
        if (g.size() >= 2) visit(g);
    };
    detail::enumerate_rec(cur, max_gen, max_embdim, filtered);
}

} // namespace nsgp
