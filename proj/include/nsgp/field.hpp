#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

#include "nsgp/errors.hpp"

namespace nsgp {

constexpr uint32_t kDefaultPrime = 32003;
constexpr uint32_t kCheckPrime = 31991;

/// Element of the prime field F_p. The modulus travels with the value so
/// polynomials over different primes cannot be mixed silently.
struct Fp {
    uint32_t v = 0;
    uint32_t p = kDefaultPrime;

    Fp() = default;
    Fp(long long x, uint32_t prime) : p(prime) {
        long long r = x % static_cast<long long>(prime);
        if (r < 0) r += prime;
        v = static_cast<uint32_t>(r);
    }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    friend Fp operator+(Fp a, Fp b) {
        assert(a.p == b.p);
        uint32_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return raw(s, a.p);
    }
    friend Fp operator-(Fp a, Fp b) {
        assert(a.p == b.p);
        uint32_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
        return raw(s, a.p);
    }
    friend Fp operator*(Fp a, Fp b) {
        assert(a.p == b.p);
        return raw(static_cast<uint32_t>(
                       (static_cast<uint64_t>(a.v) * b.v) % a.p),
                   a.p);
    }
    Fp operator-() const { return raw(v == 0 ? 0 : p - v, p); }

    Fp inv() const {
        if (v == 0) throw error("Fp: division by zero");
        // Fermat: v^(p-2)
        uint64_t base = v, acc = 1;
        uint32_t e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return raw(static_cast<uint32_t>(acc), p);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    static Fp raw(uint32_t v, uint32_t p) {
        Fp x;
        x.v = v;
        x.p = p;
        return x;
    }
    static Fp zero(uint32_t p) { return raw(0, p); }
    static Fp one(uint32_t p) { return raw(1, p); }

    std::string str() const {
        // Render in the symmetric range for readability (p-1 prints as -1).
        long long s = v;
        if (s > p / 2) s -= p;
        return std::to_string(s);
    }
};

/// Exact rationals on 64-bit numerator/denominator. Overflow throws; this
/// type backs cross-checks of the F_p arithmetic, not Groebner runs.
struct Rat {
    long long n = 0, d = 1;

    Rat() = default;
    Rat(long long num, long long den = 1) : n(num), d(den) {
        if (d == 0) throw error("Rat: zero denominator");
        normalize();
    }

    bool is_zero() const { return n == 0; }
    bool is_one() const { return n == 1 && d == 1; }

    friend Rat operator+(Rat a, Rat b) {
        return make(checked(static_cast<__int128>(a.n) * b.d +
                            static_cast<__int128>(b.n) * a.d),
                    checked(static_cast<__int128>(a.d) * b.d));
    }
    friend Rat operator-(Rat a, Rat b) { return a + (-b); }
    friend Rat operator*(Rat a, Rat b) {
        return make(checked(static_cast<__int128>(a.n) * b.n),
                    checked(static_cast<__int128>(a.d) * b.d));
    }
    Rat operator-() const { return make(-n, d); }
    Rat inv() const {
        if (n == 0) throw error("Rat: division by zero");
        return make(d, n);
    }
    friend Rat operator/(Rat a, Rat b) { return a * b.inv(); }

    bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    std::string str() const {
        return d == 1 ? std::to_string(n)
                      : std::to_string(n) + "/" + std::to_string(d);
    }

    /// Image in F_p; throws if the denominator vanishes mod p.
    Fp mod(uint32_t p) const {
        Fp num(n, p), den(d, p);
        if (den.is_zero()) throw error("Rat::mod: denominator divisible by p");
        return num / den;
    }

private:
    static long long checked(__int128 x) {
        if (x > INT64_MAX || x < INT64_MIN) throw error("Rat: overflow");
        return static_cast<long long>(x);
    }
    static Rat make(long long n, long long d) {
        Rat r;
        r.n = n;
        r.d = d;
        r.normalize();
        return r;
    }
    void normalize() {
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
};

} // namespace nsgp
