#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "nsgp/linalg.hpp"
#include "nsgp/tangent_cone.hpp"

namespace nsgp {

/// Graded Betti numbers beta_{i,j} of K over R = S/I*, computed up to
/// homological degree cutoff_i with internal degrees j <= jmax.
struct BettiTable {
    int cutoff_i = 0;
    int band = 0;
    int jmax = 0;
    std::map<std::pair<int, int>, long> entries;

    long entry(int i, int j) const {
        if (i < 0 || j < i) return 0;
        if (i > cutoff_i || j > jmax)
            throw band_too_small("BettiTable::entry: requested entry outside computed window");
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    /// First (i, j) with j > i and beta_{i,j} != 0, scanning i ascending then
    /// j ascending. Only entries inside the computed window are consulted.
    std::optional<std::pair<int, int>> first_offdiagonal() const {
        for (int i = 0; i <= cutoff_i; ++i)
            for (int j = i + 1; j <= jmax; ++j) {
                auto it = entries.find({i, j});
                if (it != entries.end() && it->second != 0) return {{i, j}};
            }
        return std::nullopt;
    }

    long total(int i) const {
        long s = 0;
        for (int j = i; j <= jmax; ++j) s += entry(i, j);
        return s;
    }

    /// Macaulay-style layout: row r holds beta_{i, i+r}.
    std::string render_text() const {
        std::ostringstream os;
        os << "      ";
        for (int i = 0; i <= cutoff_i; ++i) os << "\t" << i;
        os << "\n";
        os << "total:";
        for (int i = 0; i <= cutoff_i; ++i) os << "\t" << total(i);
        os << "\n";
        for (int r = 0; r <= jmax; ++r) {
            bool any = false;
            for (int i = 0; i <= cutoff_i; ++i)
                if (i + r <= jmax && entry(i, i + r) != 0) any = true;
            if (!any && r > band) continue;
            os << "    " << r << ":";
            for (int i = 0; i <= cutoff_i; ++i) {
                os << "\t";
                if (i + r > jmax) { os << "?"; continue; }
                long v = entry(i, i + r);
                if (v == 0) os << ".";
                else os << v;
            }
            os << "\n";
        }
        return os.str();
    }
};

namespace detail {

/// Basis data of R = S/I* in all degrees <= jmax: standard monomials per
/// degree plus the normal form of every monomial in standard coordinates.
struct QuotientBasis {
    int n;
    uint32_t p;
    int jmax;
    std::vector<std::vector<Monomial>> std_mons;          // per degree
    std::vector<std::map<Monomial, int>> std_index;       // per degree
    // nf[d][monomial] = coordinates in std_mons[d]
    std::vector<std::map<Monomial, std::vector<std::pair<int, Fp>>>> nf;

    QuotientBasis(const IdealPresentation& Istar, int jmax_)
        : n(Istar.nvars()), p(Istar.prime()), jmax(jmax_) {
        TermOrder ord = TermOrder::degrevlex(n);
        const auto& gb = Istar.groebner_basis(ord);
        std::vector<Monomial> lts;
        for (auto& g : gb) lts.push_back(g.leading_monomial(ord));
        std_mons.resize(jmax + 1);
        std_index.resize(jmax + 1);
        nf.resize(jmax + 1);
        for (int d = 0; d <= jmax; ++d) {
            for (auto& m : monomials_of_degree(n, d)) {
                bool in_lt = false;
                for (auto& l : lts)
                    if (l.divides(m)) { in_lt = true; break; }
                if (!in_lt) {
                    std_index[d].emplace(m, static_cast<int>(std_mons[d].size()));
                    std_mons[d].push_back(m);
                }
            }
            for (auto& m : monomials_of_degree(n, d)) {
                Poly f = normal_form(Poly::monomial(n, Fp::one(p), m), gb, ord);
                std::vector<std::pair<int, Fp>> coords;
                for (auto& t : f.terms())
                    coords.push_back({std_index[d].at(t.mono), t.coeff});
                nf[d].emplace(m, std::move(coords));
            }
        }
    }

    int dim(int d) const {
        if (d < 0) return 0;
        if (d > jmax) throw band_too_small("QuotientBasis: degree beyond window");
        return static_cast<int>(std_mons[d].size());
    }
};

/// An element of R in a fixed degree: sparse standard-monomial coordinates.
using RElem = std::vector<std::pair<int, Fp>>;

/// Multiply an arbitrary monomial by an RElem of degree d2, landing in
/// degree deg(m1) + d2.
inline RElem mult_mono(const QuotientBasis& B, const Monomial& m1, int d2,
                       const RElem& v) {
    std::map<int, Fp> acc;
    int dout = m1.degree() + d2;
    for (auto& [idx2, c2] : v) {
        Monomial prod = m1 * B.std_mons[d2][idx2];
        for (auto& [ridx, rc] : B.nf[dout].at(prod)) {
            auto it = acc.find(ridx);
            Fp add = rc * c2;
            if (it == acc.end()) acc.emplace(ridx, add);
            else it->second = it->second + add;
        }
    }
    RElem out;
    for (auto& [i, c] : acc)
        if (!c.is_zero()) out.push_back({i, c});
    return out;
}

/// A free graded R-module with a map to the previous one in the resolution.
/// images[g][k] is the k-th component (over prev generators) of the image of
/// generator g; it lives in degree gen_deg[g] - prev_gen_deg[k].
struct FreeModule {
    std::vector<int> gen_deg;
    std::vector<std::vector<RElem>> images;
};

} // namespace detail

/// Minimal graded free resolution of K over R = S/Istar, by iterated graded
/// syzygy computation in exact linear algebra. All kernel generators of
/// internal degree <= max_i + band are tracked at every homological level,
/// which makes every entry with j <= max_i + band exact.
inline BettiTable betti_table_over_quotient(const IdealPresentation& Istar,
                                            int max_i, int band,
                                            bool stop_at_offdiagonal = false) {
    if (!Istar.is_homogeneous())
        throw non_homogeneous_input("betti_table_over_quotient: ideal must be homogeneous");
    int jmax = max_i + band;
    uint32_t p = Istar.prime();
    detail::QuotientBasis B(Istar, jmax);

    BettiTable table;
    table.cutoff_i = max_i;
    table.band = band;
    table.jmax = jmax;
    table.entries[{0, 0}] = 1;

    // Level 0: F_0 = R, augmented to K. Kernel in degree j is all of R_j for
    // j >= 1. Kernel vectors are flattened coordinates in (F_cur)_j.
    detail::FreeModule F_cur; // F_i
    F_cur.gen_deg = {0};

    // Per degree, a basis of ker(d_i)_j in flattened (F_i)_j coordinates.
    std::vector<std::vector<std::vector<Fp>>> ker(jmax + 1);
    for (int j = 1; j <= jmax; ++j) {
        int dim = B.dim(j);
        for (int c = 0; c < dim; ++c) {
            std::vector<Fp> v(dim, Fp::zero(p));
            v[c] = Fp::one(p);
            ker[j].push_back(std::move(v));
        }
    }

    auto flat_dim = [&](const std::vector<int>& degs, int j) {
        int s = 0;
        for (int d : degs)
            if (j - d >= 0 && j - d <= jmax) s += B.dim(j - d);
        return s;
    };

    for (int i = 1; i <= max_i; ++i) {
        // Extract minimal generators of the kernel: those of degree j outside
        // m * kernel = span of x_t * (kernel basis at degree j-1).
        detail::FreeModule F_next;
        std::vector<std::vector<std::vector<Fp>>> next_gen_vectors_by_deg(jmax + 1);
        for (int j = 0; j <= jmax; ++j) {
            if (ker[j].empty()) continue;
            int fd = flat_dim(F_cur.gen_deg, j);
            RowSpace span(fd, p);
            // x_t * v for v in ker[j-1]: componentwise multiplication in R.
            if (j >= 1) {
                for (auto& v : ker[j - 1]) {
                    for (int t = 0; t < B.n; ++t) {
                        std::vector<Fp> w(fd, Fp::zero(p));
                        int off_src = 0, off_dst = 0;
                        for (int g = 0; g < static_cast<int>(F_cur.gen_deg.size()); ++g) {
                            int ds = j - 1 - F_cur.gen_deg[g];
                            int dd = j - F_cur.gen_deg[g];
                            int dims = ds >= 0 ? B.dim(ds) : 0;
                            int dimd = dd >= 0 ? B.dim(dd) : 0;
                            if (dims > 0 && dimd > 0) {
                                detail::RElem comp;
                                for (int c = 0; c < dims; ++c)
                                    if (!v[off_src + c].is_zero())
                                        comp.push_back({c, v[off_src + c]});
                                detail::RElem prod = detail::mult_mono(
                                    B, Monomial::var(t, B.n), ds, comp);
                                for (auto& [idx, c] : prod) w[off_dst + idx] = c;
                            }
                            off_src += dims;
                            off_dst += dimd;
                        }
                        span.insert(std::move(w));
                    }
                }
            }
            for (auto& v : ker[j]) {
                if (span.insert(v)) {
                    F_next.gen_deg.push_back(j);
                    next_gen_vectors_by_deg[j].push_back(v);
                    // image of the new generator: v split per component of F_cur
                    std::vector<detail::RElem> img;
                    int off = 0;
                    for (int g = 0; g < static_cast<int>(F_cur.gen_deg.size()); ++g) {
                        int dg = j - F_cur.gen_deg[g];
                        int dim = dg >= 0 && dg <= jmax ? B.dim(dg) : 0;
                        detail::RElem comp;
                        for (int c = 0; c < dim; ++c)
                            if (!v[off + c].is_zero()) comp.push_back({c, v[off + c]});
                        img.push_back(std::move(comp));
                        off += dim;
                    }
                    F_next.images.push_back(std::move(img));
                    table.entries[{i, j}] += 1;
                }
            }
        }

        if (stop_at_offdiagonal && table.first_offdiagonal()) {
            table.cutoff_i = i;
            return table;
        }
        if (i == max_i) break;

        // Kernel of d_{i+1}: F_next -> F_cur, degree by degree, plus the
        // exactness check rank(d_{i+1})_j = dim ker(d_i)_j.
        std::vector<std::vector<std::vector<Fp>>> next_ker(jmax + 1);
        for (int j = 0; j <= jmax; ++j) {
            int cols = flat_dim(F_next.gen_deg, j);
            int rows = flat_dim(F_cur.gen_deg, j);
            if (cols == 0) { // nothing to do; exactness check still applies
                if (static_cast<int>(ker[j].size()) != 0)
                    throw error("betti_table_over_quotient: exactness failure (empty cover)");
                continue;
            }
            FpMatrix M(rows, cols, p);
            int coff = 0;
            for (size_t g = 0; g < F_next.gen_deg.size(); ++g) {
                int dg = j - F_next.gen_deg[g];
                int cdim = dg >= 0 && dg <= jmax ? B.dim(dg) : 0;
                for (int c = 0; c < cdim; ++c) {
                    // column = (std monomial c of degree dg) * image(gen g)
                    int roff = 0;
                    for (size_t h = 0; h < F_cur.gen_deg.size(); ++h) {
                        int dh = j - F_cur.gen_deg[h];
                        int rdim = dh >= 0 && dh <= jmax ? B.dim(dh) : 0;
                        if (rdim > 0) {
                            int comp_deg = F_next.gen_deg[g] - F_cur.gen_deg[h];
                            if (comp_deg >= 0 && dg <= jmax) {
                                detail::RElem prod = detail::mult_mono(
                                    B, B.std_mons[dg][c], comp_deg, F_next.images[g][h]);
                                for (auto& [idx, cf] : prod)
                                    M.set(roff + idx, coff + c, cf);
                            }
                        }
                        roff += rdim;
                    }
                }
                coff += cdim;
            }
            next_ker[j] = M.kernel_basis();
            int rank = cols - static_cast<int>(next_ker[j].size());
            if (rank != static_cast<int>(ker[j].size()))
                throw error("betti_table_over_quotient: exactness check failed at degree " +
                            std::to_string(j));
        }
        F_cur = std::move(F_next);
        ker = std::move(next_ker);
    }
    return table;
}

} // namespace nsgp
