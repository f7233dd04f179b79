#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include "nsgp/errors.hpp"

namespace nsgp {

/// A numerical semigroup H given by its minimal generating set G(H).
///
/// Instances are immutable after construction. Membership and order tables
/// are memoized internally and grow on demand (single-writer contract: share
/// instances across threads only after warming the caches).
class NumericalSemigroup {
public:
    /// Builds H from an arbitrary generating set. Redundant generators are
    /// removed (largest candidates tested first, iterated to a fixed point).
    static NumericalSemigroup from_generators(std::vector<long> raw) {
        if (raw.empty()) throw invalid_input("from_generators: empty input");
        for (long a : raw)
            if (a <= 0) throw invalid_input("from_generators: non-positive generator");
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        long g = 0;
        for (long a : raw) g = std::gcd(g, a);
        if (g != 1) throw invalid_input("from_generators: gcd of generators is not 1");
        // Drop a iff a lies in the monoid generated by the others.
        bool changed = true;
        while (changed && raw.size() > 1) {
            changed = false;
            for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
                std::vector<long> rest;
                for (long a : raw)
                    if (a != *it) rest.push_back(a);
                if (monoid_contains(rest, *it)) {
                    raw.erase(std::next(it).base());
                    changed = true;
                    break;
                }
            }
        }
        return NumericalSemigroup(std::move(raw));
    }

    const std::vector<long>& generators() const { return gens_; }
    long multiplicity() const { return gens_.front(); }
    int embdim() const { return static_cast<int>(gens_.size()); }
    bool is_natural_numbers() const { return gens_.size() == 1; }

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

    bool contains(long h) const {
        if (h < 0) return false;
        ensure_tables(h);
        return cache_->member[h];
    }

    /// ord_H(h): the maximal number of generators (with repetition) summing
    /// to h. Throws if h is not in H.
    long order_of(long h) const {
        if (!contains(h)) throw not_in_semigroup("order_of: element not in semigroup");
        return cache_->ord[h];
    }

    /// g(H) = max(N \ H), with g(N) = -1.
    long frobenius_number() const {
        if (!cache_->frobenius) cache_->frobenius = compute_frobenius();
        return *cache_->frobenius;
    }

    std::vector<long> gaps() const {
        long g = frobenius_number();
        std::vector<long> out;
        for (long h = 1; h <= g; ++h)
            if (!contains(h)) out.push_back(h);
        return out;
    }

    /// The n least elements of H, one per residue class mod n.
    /// Returned indexed by residue 0..n-1.
    std::vector<long> apery_set(long n) const {
        if (n <= 0 || !contains(n))
            throw not_in_semigroup("apery_set: argument must be a nonzero element of H");
        std::vector<long> ap(static_cast<size_t>(n), -1);
        long found = 0;
        for (long h = 0; found < n; ++h) {
            long r = h % n;
            if (ap[r] < 0 && contains(h)) {
                ap[r] = h;
                ++found;
            }
        }
        return ap;
    }

    /// PF(H) = { n in Z \ H : n + h in H for all h in H, h != 0 }.
    std::vector<long> pseudo_frobenius() const {
        long g = frobenius_number();
        if (g < 0) return {-1}; // H = N
        std::vector<long> pf;
        for (long z = 1; z <= g; ++z) {
            if (contains(z)) continue;
            bool ok = true;
            for (long a : gens_)
                if (!contains(z + a)) { ok = false; break; }
            if (ok) pf.push_back(z);
        }
        return pf;
    }

    bool is_symmetric() const {
        auto pf = pseudo_frobenius();
        return pf.size() == 1;
    }

    bool is_pseudo_symmetric() const {
        long g = frobenius_number();
        if (g < 0 || g % 2 != 0) return false;
        auto pf = pseudo_frobenius();
        return pf.size() == 2 && pf[0] == g / 2 && pf[1] == g;
    }

    /// #{h in H : ord_H(h) = i} = dim_K m^i/m^{i+1}, the Hilbert function of
    /// the tangent cone. This is the combinatorial oracle every
    /// Groebner-level computation is checked against.
    long gr_hilbert_function(long i) const {
        if (i < 0) return 0;
        if (i == 0) return 1;
        long bound = i * gens_.back();
        ensure_tables(bound);
        long count = 0;
        for (long h = 1; h <= bound; ++h)
            if (cache_->member[h] && cache_->ord[h] == i) ++count;
        return count;
    }

    /// Least i0 such that the tangent-cone Hilbert function equals e(H) on
    /// the window [i0, i0 + window].
    long gr_hilbert_stabilization(long window = 0) const {
        if (window <= 0) window = embdim() + 2;
        long e = multiplicity();
        for (long i0 = 0;; ++i0) {
            bool ok = true;
            for (long i = i0; i <= i0 + window; ++i)
                if (gr_hilbert_function(i) != e) { ok = false; break; }
            if (ok) return i0;
        }
    }

private:
    explicit NumericalSemigroup(std::vector<long> gens)
        : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

    struct Cache {
        std::vector<char> member{1}; // member[0] = true
        std::vector<long> ord{0};
        std::optional<long> frobenius;
        Cache() { member[0] = 1; }
    };

    static bool monoid_contains(const std::vector<long>& gens, long h) {
        if (h < 0) return false;
        std::vector<char> dp(static_cast<size_t>(h) + 1, 0);
        dp[0] = 1;
        for (long v = 1; v <= h; ++v)
            for (long a : gens)
                if (a <= v && dp[v - a]) { dp[v] = 1; break; }
        return dp[h];
    }

    void ensure_tables(long upto) const {
        if (upto < 0) return;
        auto& mem = cache_->member;
        auto& ord = cache_->ord;
        for (long h = static_cast<long>(mem.size()); h <= upto; ++h) {
            char m = 0;
            long o = -1;
            for (long a : gens_) {
                if (a > h) break;
                if (mem[h - a]) {
                    m = 1;
                    o = std::max(o, ord[h - a] + 1);
                }
            }
            mem.push_back(m);
            ord.push_back(o);
        }
    }

    long compute_frobenius() const {
        if (gens_.front() == 1) return -1;
        long a1 = gens_.front();
        long bound = gens_.front() * gens_.back();
        for (;; bound *= 2) {
            ensure_tables(bound);
            // Once a1 consecutive members appear, everything beyond is in H.
            long run = 0;
            for (long h = 0; h <= bound; ++h) {
                run = cache_->member[h] ? run + 1 : 0;
                if (run == a1) {
                    long g = -1;
                    for (long z = h; z >= 0; --z)
                        if (!cache_->member[z]) { g = z; break; }
                    return g;
                }
            }
        }
    }

    std::vector<long> gens_;
    std::shared_ptr<Cache> cache_;
};

} // namespace nsgp
