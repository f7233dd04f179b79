// Command-line front end: analyze single semigroups, build gluings and
// families, and run corpus searches.

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nsgp/report.hpp"

namespace {

using namespace nsgp;

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stol(tok));
    return out;
}

struct CommonFlags {
    bool json = false;
    bool timings = false;
    AnalyzeOptions opt;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_flag("--json", f.json, "emit JSON instead of text");
    cmd->add_flag("--timings", f.timings, "include per-stage timings (non-deterministic)");
    cmd->add_option("--field", f.opt.field, "field characteristic (prime)");
    cmd->add_option("--max-i", f.opt.max_i, "homological degree cutoff for Betti tables");
    cmd->add_option("--band", f.opt.band, "off-diagonal band width for Betti tables");
    cmd->add_option("--perm-limit", f.opt.perm_limit,
                    "max embdim for the G-quadratic permutation search");
}

void emit_report(const AnalysisReport& r, const CommonFlags& f) {
    AnalyzeOptions opt = f.opt;
    opt.with_timings = f.timings;
    if (f.json)
        std::cout << report_to_json(r, opt).dump(2) << "\n";
    else
        std::cout << report_to_text(r, opt);
}

int cmd_analyze(const std::vector<long>& gens, const CommonFlags& f) {
    AnalyzeOptions opt = f.opt;
    opt.with_timings = f.timings;
    emit_report(analyze_semigroup(gens, opt), f);
    return 0;
}

int cmd_glue(const std::vector<long>& child_gens, long c, long ell,
             const CommonFlags& f) {
    NumericalSemigroup L = NumericalSemigroup::from_generators(child_gens);
    NumericalSemigroup H = simple_glue(L, c, ell);
    GluingTangentCone tc = tangent_cone_of_gluing(L, c, ell, f.opt.field);
    Poly rel = gluing_relation(L, c, ell, f.opt.field);
    if (!f.json) {
        std::cout << "glued H = <";
        auto ordered = glued_generators_ordered(L, c, ell);
        for (size_t i = 0; i < ordered.size(); ++i)
            std::cout << (i ? "," : "") << ordered[i];
        std::cout << ">\n";
        std::cout << "gluing relation f = " << rel.str() << "\n";
        std::cout << "initial-ideal formula (I_L* S, f*) applied: "
                  << (tc.formula_applied ? "yes" : "no") << "\n";
    }
    AnalyzeOptions opt = f.opt;
    opt.with_timings = f.timings;
    AnalysisReport r = analyze_semigroup(H.generators(), opt);
    if (f.json) {
        nlohmann::ordered_json j = report_to_json(r, opt);
        j["gluing"] = {{"child", L.generators()},
                       {"c", c},
                       {"ell", ell},
                       {"relation", rel.str()},
                       {"initial_formula_applied", tc.formula_applied}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report_to_text(r, opt);
    }
    return 0;
}

int cmd_family(const std::string& kind, const std::string& a_str,
               const std::string& b_str, long a1, long d, int n, long a,
               long a21, const CommonFlags& f) {
    std::vector<long> gens;
    std::string note;
    if (kind == "arithmetic") {
        auto fam = arithmetic_semigroup(a1, d, n, f.opt.field);
        gens = fam.H.generators();
        note = std::string("closed form: Koszul iff n <= a1 <= 2n-2: ") +
               (classify_arithmetic(a1, d, n) ? "yes" : "no");
    } else if (kind == "compound") {
        auto fam = compound_semigroup(parse_list(a_str), parse_list(b_str), f.opt.field);
        gens = fam.H.generators();
        note = std::string("closed form: quadratic iff all a_i = 2: ") +
               (fam.quadratic_predicted ? "yes" : "no");
    } else if (kind == "watanabe") {
        gens = watanabe(n, a).generators();
    } else if (kind == "coprime") {
        auto fam = coprime_product_semigroup(parse_list(a_str), f.opt.field);
        gens = fam.H.generators();
        note = "closed form: complete intersection, never quadratic";
    } else if (kind == "bresinsky") {
        auto v = parse_list(a_str);
        if (v.size() != 8)
            throw invalid_input("bresinsky needs --a with 8 values "
                                "a21,a31,a32,a42,a13,a43,a14,a24");
        auto fam = bresinsky_symmetric(
            {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]}, f.opt.field);
        gens = fam.H.generators();
    } else if (kind == "komeda") {
        auto v = parse_list(a_str);
        if (v.size() != 4)
            throw invalid_input("komeda needs --a with 4 values c1,c2,c3,c4");
        auto fam = komeda_pseudosymmetric({v[0], v[1], v[2], v[3], a21}, f.opt.field);
        gens = fam.H.generators();
    } else {
        throw invalid_input("unknown family kind: " + kind);
    }
    if (!f.json && !note.empty()) std::cout << note << "\n";
    return cmd_analyze(gens, f);
}

int cmd_search(int embdim, long max_gen, bool only_quadratic, bool with_koszul,
               int jobs, const CommonFlags& f) {
    if (embdim < 2 || max_gen < 2) throw invalid_input("search: need embdim, max-gen >= 2");
    std::vector<std::vector<long>> corpus;
    enumerate_semigroups(embdim, max_gen,
                         [&](const std::vector<long>& g) { corpus.push_back(g); });
    struct Row {
        std::vector<long> gens;
        long e = 0;
        int n = 0;
        bool quadratic = false;
        std::string koszul;
        bool keep = true;
    };
    std::vector<Row> rows(corpus.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1)) {
            NumericalSemigroup H = NumericalSemigroup::from_generators(corpus[i]);
            Row& r = rows[i];
            r.gens = corpus[i];
            r.e = H.multiplicity();
            r.n = H.embdim();
            r.quadratic = is_quadratic(H, nullptr, f.opt.field).quadratic;
            if (only_quadratic && !r.quadratic) { r.keep = false; continue; }
            if (with_koszul) {
                KoszulVerdict v = koszul_verdict(H, f.opt.max_i, f.opt.band, f.opt.field);
                r.koszul = v.status == KoszulStatus::KoszulCertified ? "koszul"
                           : v.status == KoszulStatus::NotKoszul     ? "not-koszul"
                                                                     : "undecided";
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // Deterministic merge: rows come out in enumeration order regardless of jobs.
    std::map<int, std::map<long, long>> histogram; // embdim -> e -> count
    for (auto& r : rows) {
        if (!r.keep) continue;
        histogram[r.n][r.e]++;
        if (f.json) {
            nlohmann::ordered_json j;
            j["generators"] = r.gens;
            j["multiplicity"] = r.e;
            j["embdim"] = r.n;
            j["quadratic"] = r.quadratic;
            if (with_koszul) j["koszul"] = r.koszul;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "<";
            for (size_t i = 0; i < r.gens.size(); ++i)
                std::cout << (i ? "," : "") << r.gens[i];
            std::cout << "> e=" << r.e << " n=" << r.n
                      << " quadratic=" << (r.quadratic ? "yes" : "no");
            if (with_koszul) std::cout << " koszul=" << r.koszul;
            std::cout << "\n";
        }
    }
    if (f.json) {
        nlohmann::ordered_json j;
        j["summary"] = "multiplicity histogram per embdim";
        for (auto& [n, by_e] : histogram) {
            nlohmann::ordered_json h;
            for (auto& [e, cnt] : by_e) h[std::to_string(e)] = cnt;
            j["embdim_" + std::to_string(n)] = std::move(h);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "-- multiplicity histogram --\n";
        for (auto& [n, by_e] : histogram) {
            std::cout << "embdim " << n << ":";
            for (auto& [e, cnt] : by_e) std::cout << " e=" << e << " x" << cnt;
            std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup tangent-cone and Koszulness toolkit"};
    app.require_subcommand(1);

    CommonFlags fa, fg, ff, fs;

    auto* analyze = app.add_subcommand("analyze", "full report for one semigroup");
    std::vector<long> a_gens;
    analyze->add_option("gens", a_gens, "minimal generators")->required();
    add_common(analyze, fa);

    auto* glue = app.add_subcommand("glue", "simple gluing <c*L, ell> plus report");
    std::vector<long> g_gens;
    long g_c = 2, g_ell = 0;
    glue->add_option("gens", g_gens, "generators of the child L")->required();
    glue->add_option("--c", g_c, "multiplier on L")->required();
    glue->add_option("--l", g_ell, "new generator ell")->required();
    add_common(glue, fg);

    auto* family = app.add_subcommand("family", "construct a parametric family member");
    std::string f_kind, f_a, f_b;
    long f_a1 = 0, f_d = 1, f_av = 1, f_a21 = 1;
    int f_n = 3;
    family->add_option("kind", f_kind,
                       "arithmetic|compound|watanabe|coprime|bresinsky|komeda")
        ->required();
    family->add_option("--a", f_a, "comma list (family-specific)");
    family->add_option("--b", f_b, "comma list (compound)");
    family->add_option("--a1", f_a1, "first generator (arithmetic)");
    family->add_option("--d", f_d, "common difference (arithmetic)");
    family->add_option("--n", f_n, "length / depth parameter");
    family->add_option("--av", f_av, "odd offset a (watanabe)");
    family->add_option("--a21", f_a21, "alpha_21 (komeda)");
    add_common(family, ff);

    auto* search = app.add_subcommand("search", "scan all semigroups in a range");
    int s_embdim = 3, s_jobs = 1;
    long s_maxgen = 12;
    bool s_quad = false, s_koszul = false;
    search->add_option("--embdim", s_embdim, "max embedding dimension");
    search->add_option("--max-gen", s_maxgen, "max generator value");
    search->add_flag("--quadratic", s_quad, "only report quadratic semigroups");
    search->add_flag("--koszul", s_koszul, "also compute Koszul verdicts");
    search->add_option("--jobs", s_jobs, "worker threads (deterministic merge)");
    add_common(search, fs);

    try {
        app.parse(argc, argv);
        if (*analyze) return cmd_analyze(a_gens, fa);
        if (*glue) return cmd_glue(g_gens, g_c, g_ell, fg);
        if (*family)
            return cmd_family(f_kind, f_a, f_b, f_a1, f_d, f_n, f_av, f_a21, ff);
        if (*search)
            return cmd_search(s_embdim, s_maxgen, s_quad, s_koszul, s_jobs, fs);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nsgp::oracle_mismatch& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const nsgp::invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const nsgp::error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
