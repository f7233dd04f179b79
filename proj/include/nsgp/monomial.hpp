#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "nsgp/errors.hpp"

namespace nsgp {

/// Dense exponent vector in a fixed ambient ring K[x1..xn].
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int a) { return a == 0; });
    }

    static Monomial var(int i, int nvars, int exp = 1) {
        Monomial m(nvars);
        m.e[i] = exp;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < r.nvars(); ++i) r.e[i] += b.e[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    /// m / *this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& m) const {
        Monomial r = m;
        for (int i = 0; i < r.nvars(); ++i) r.e[i] -= e[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < r.nvars(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < r.nvars(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
        return r;
    }

    bool coprime_with(const Monomial& b) const {
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; } // container key only

    std::string str() const {
        std::string s;
        for (int i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

enum class OrderKind { Lex, DegRevLex };

/// A global term order: optional weight rows compared first (larger weighted
/// degree wins), then lex or degrevlex along a variable ranking.
struct TermOrder {
    int nvars = 0;
    OrderKind kind = OrderKind::DegRevLex;
    std::vector<int> perm;                    // perm[k] = index of k-th highest variable
    std::vector<std::vector<int>> weight_rows;

    static TermOrder degrevlex(int nvars) {
        return with_perm(nvars, identity(nvars), OrderKind::DegRevLex);
    }
    static TermOrder lex(int nvars) {
        return with_perm(nvars, identity(nvars), OrderKind::Lex);
    }
    static TermOrder with_perm(int nvars, std::vector<int> perm, OrderKind kind) {
        TermOrder o;
        o.nvars = nvars;
        o.kind = kind;
        o.perm = std::move(perm);
        return o;
    }

    /// Block order placing the listed variables strictly above the rest,
    /// with degrevlex inside each block. Used for elimination.
    static TermOrder elimination_block(int nvars, const std::vector<int>& first_block) {
        TermOrder o = degrevlex(nvars);
        std::vector<int> row(nvars, 0);
        for (int i : first_block) row[i] = 1;
        o.weight_rows.push_back(std::move(row));
        return o;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        for (const auto& w : weight_rows) {
            long long sa = 0, sb = 0;
            for (int i = 0; i < nvars; ++i) {
                sa += static_cast<long long>(w[i]) * a.e[i];
                sb += static_cast<long long>(w[i]) * b.e[i];
            }
            if (sa != sb) return sa < sb ? -1 : 1;
        }
        if (kind == OrderKind::Lex) {
            for (int k = 0; k < nvars; ++k) {
                int i = perm[k];
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            }
            return 0;
        }
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (int k = nvars - 1; k >= 0; --k) {
            int i = perm[k];
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1; // smaller tail wins
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Stable identity for caching Groebner bases per order.
    std::string key() const {
        std::string s = kind == OrderKind::Lex ? "lex:" : "drl:";
        for (int i : perm) s += std::to_string(i) + ",";
        for (const auto& w : weight_rows) {
            s += "|";
            for (int x : w) s += std::to_string(x) + ",";
        }
        return s;
    }

    static std::vector<int> identity(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        return p;
    }
};

} // namespace nsgp
