#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "nsgp/field.hpp"
#include "nsgp/monomial.hpp"

namespace nsgp {

template <typename C>
struct Term {
    C coeff;
    Monomial mono;
};

/// Exact multivariate polynomial. Terms are kept sorted descending under the
/// canonical degrevlex order of the ambient ring, with no zero coefficients
/// and no duplicate monomials; the zero polynomial is the empty term list.
template <typename C>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial from_terms(int nvars, std::vector<Term<C>> terms) {
        Polynomial f(nvars);
        std::map<Monomial, C> acc;
        for (auto& t : terms) {
            auto it = acc.find(t.mono);
            if (it == acc.end())
                acc.emplace(t.mono, t.coeff);
            else
                it->second = it->second + t.coeff;
        }
        TermOrder canon = TermOrder::degrevlex(nvars);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) f.terms_.push_back({c, m});
        std::sort(f.terms_.begin(), f.terms_.end(),
                  [&](const Term<C>& a, const Term<C>& b) {
                      return canon.greater(a.mono, b.mono);
                  });
        return f;
    }

    static Polynomial monomial(int nvars, C c, Monomial m) {
        Polynomial f(nvars);
        if (!c.is_zero()) f.terms_.push_back({c, std::move(m)});
        return f;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term<C>>& terms() const { return terms_; }

    int degree() const {
        require_nonzero("degree");
        int d = 0;
        for (auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    int initial_degree() const {
        require_nonzero("initial_degree");
        int d = terms_[0].mono.degree();
        for (auto& t : terms_) d = std::min(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_[0].mono.degree();
        for (auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    /// f*: the homogeneous component of least total degree.
    Polynomial initial_form() const {
        int d = initial_degree();
        std::vector<Term<C>> sel;
        for (auto& t : terms_)
            if (t.mono.degree() == d) sel.push_back(t);
        return from_terms(nvars_, std::move(sel));
    }

    const Term<C>& leading_term(const TermOrder& ord) const {
        require_nonzero("leading_term");
        const Term<C>* best = &terms_[0];
        for (auto& t : terms_)
            if (ord.greater(t.mono, best->mono)) best = &t;
        return *best;
    }
    const Monomial& leading_monomial(const TermOrder& ord) const {
        return leading_term(ord).mono;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Term<C>> ts = a.terms_;
        ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
        return from_terms(std::max(a.nvars_, b.nvars_), std::move(ts));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::vector<Term<C>> ts;
        ts.reserve(a.terms_.size() * b.terms_.size());
        for (auto& s : a.terms_)
            for (auto& t : b.terms_)
                ts.push_back({s.coeff * t.coeff, s.mono * t.mono});
        return from_terms(std::max(a.nvars_, b.nvars_), std::move(ts));
    }

    Polynomial scaled(const C& c) const {
        if (c.is_zero()) return Polynomial(nvars_);
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }
    Polynomial times_term(const C& c, const Monomial& m) const {
        Polynomial r = scaled(c);
        for (auto& t : r.terms_) t.mono = t.mono * m;
        return r; // stays sorted: multiplication by a monomial preserves degrevlex
    }

    Polynomial monic(const TermOrder& ord) const {
        const C& lc = leading_term(ord).coeff;
        return scaled(C(1, lc_prime(lc)) / lc);
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff ||
                terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < terms_.size(); ++i) {
            std::string c = terms_[i].coeff.str();
            bool neg = !c.empty() && c[0] == '-';
            if (neg) c = c.substr(1);
            if (i == 0)
                s += neg ? "-" : "";
            else
                s += neg ? "-" : "+";
            bool unit = c == "1";
            if (terms_[i].mono.is_one())
                s += c;
            else if (unit)
                s += terms_[i].mono.str();
            else
                s += c + "*" + terms_[i].mono.str();
        }
        return s;
    }

private:
    void require_nonzero(const char* op) const {
        if (terms_.empty())
            throw zero_polynomial(std::string(op) + ": zero polynomial");
    }
    static uint32_t lc_prime(const Fp& c) { return c.p; }
    static long long lc_prime(const Rat&) { return 1; }

    int nvars_ = 0;
    std::vector<Term<C>> terms_;
};

using Poly = Polynomial<Fp>;
using PolyQ = Polynomial<Rat>;

/// S(f,g) = (lcm/lt f) f - (lcm/lt g) g.
template <typename C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g,
                           const TermOrder& ord) {
    const Term<C>& tf = f.leading_term(ord);
    const Term<C>& tg = g.leading_term(ord);
    Monomial l = lcm(tf.mono, tg.mono);
    return f.times_term(tg.coeff, tf.mono.quotient_of(l)) -
           g.times_term(tf.coeff, tg.mono.quotient_of(l));
}

/// Image under x_i -> t^{a_i}, as an exponent -> coefficient map.
template <typename C>
std::map<long, C> substitute_powers(const Polynomial<C>& f,
                                    const std::vector<long>& a) {
    std::map<long, C> out;
    for (auto& t : f.terms()) {
        long d = 0;
        for (int i = 0; i < t.mono.nvars(); ++i)
            d += static_cast<long>(t.mono.e[i]) * a[i];
        auto it = out.find(d);
        if (it == out.end())
            out.emplace(d, t.coeff);
        else
            it->second = it->second + t.coeff;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Parses the notation used throughout: e.g. "x2^2-x1*x4", "3*x1-2".
/// Variables are x1..xn (1-based).
inline Poly parse_poly(const std::string& src, int nvars, uint32_t p) {
    std::vector<Term<Fp>> terms;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    auto parse_int = [&]() -> long long {
        size_t start = i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        if (i == start) throw invalid_input("parse_poly: expected integer in '" + src + "'");
        return std::stoll(src.substr(start, i - start));
    };
    skip_ws();
    bool first = true;
    while (i < src.size()) {
        int sign = 1;
        skip_ws();
        if (src[i] == '+' || src[i] == '-') {
            sign = src[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw invalid_input("parse_poly: expected '+' or '-' in '" + src + "'");
        }
        first = false;
        skip_ws();
        long long coeff = 1;
        bool saw_factor = false;
        Monomial m(nvars);
        for (;;) {
            skip_ws();
            if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                coeff *= parse_int();
                saw_factor = true;
            } else if (i < src.size() && src[i] == 'x') {
                ++i;
                long long vi = parse_int();
                if (vi < 1 || vi > nvars)
                    throw invalid_input("parse_poly: variable index out of range in '" + src + "'");
                int exp = 1;
                if (i < src.size() && src[i] == '^') {
                    ++i;
                    exp = static_cast<int>(parse_int());
                }
                m.e[vi - 1] += exp;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (i < src.size() && src[i] == '*')
                ++i;
            else
                break;
        }
        if (!saw_factor) throw invalid_input("parse_poly: empty term in '" + src + "'");
        terms.push_back({Fp(sign * coeff, p), m});
        skip_ws();
    }
    return Poly::from_terms(nvars, std::move(terms));
}

inline std::vector<Poly> parse_polys(const std::vector<std::string>& srcs,
                                     int nvars, uint32_t p) {
    std::vector<Poly> out;
    out.reserve(srcs.size());
    for (auto& s : srcs) out.push_back(parse_poly(s, nvars, p));
    return out;
}

} // namespace nsgp
