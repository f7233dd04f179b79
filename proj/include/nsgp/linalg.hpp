#pragma once

#include <cstdint>
#include <vector>

#include "nsgp/field.hpp"

namespace nsgp {

/// Dense matrix over F_p, row-major. Sized for the modest ranks that show up
/// in graded pieces of resolutions (a few thousand rows/columns at most).
class FpMatrix {
public:
    FpMatrix(int rows, int cols, uint32_t p)
        : rows_(rows), cols_(cols), p_(p),
          a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t prime() const { return p_; }

    uint32_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    uint32_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    void set(int i, int j, Fp v) { at(i, j) = v.v; }
    Fp get(int i, int j) const { return Fp::raw(at(i, j), p_); }

    /// In-place reduced row echelon form. Deterministic: pivots are chosen
    /// top-down, leftmost column first. Returns the pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c) != 0) { sel = i; break; }
            if (sel < 0) continue;
            if (sel != r) swap_rows(sel, r);
            scale_row(r, Fp::raw(at(r, c), p_).inv());
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                add_multiple(i, r, -Fp::raw(at(i, c), p_));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FpMatrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    /// Basis of the right kernel {v : A v = 0}, one vector per non-pivot
    /// column, in column order (the standard rref construction).
    std::vector<std::vector<Fp>> kernel_basis() const {
        FpMatrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (int c : pivots) is_pivot[c] = 1;
        std::vector<std::vector<Fp>> basis;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<Fp> v(cols_, Fp::zero(p_));
            v[c] = Fp::one(p_);
            for (size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = -m.get(static_cast<int>(k), c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void scale_row(int i, Fp s) {
        for (int c = 0; c < cols_; ++c)
            at(i, c) = static_cast<uint32_t>(
                static_cast<uint64_t>(at(i, c)) * s.v % p_);
    }
    void add_multiple(int dst, int src, Fp s) {
        if (s.is_zero()) return;
        for (int c = 0; c < cols_; ++c) {
            uint64_t x = at(dst, c) + static_cast<uint64_t>(at(src, c)) * s.v % p_;
            at(dst, c) = static_cast<uint32_t>(x >= p_ ? x - p_ : x);
        }
    }

    int rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> a_;
};

/// Incremental row space: feed vectors, learn which are independent of what
/// came before. Used to extend spanning sets to bases deterministically.
class RowSpace {
public:
    RowSpace(int ncols, uint32_t p) : ncols_(ncols), p_(p) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the accumulated space; if a nonzero remainder
    /// survives it is absorbed and true is returned.
    bool insert(std::vector<Fp> v) {
        reduce(v);
        int lead = leading(v);
        if (lead < 0) return false;
        Fp inv = v[lead].inv();
        for (auto& x : v) x = x * inv;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    bool contains(std::vector<Fp> v) const {
        reduce(v);
        return leading(v) < 0;
    }

private:
    void reduce(std::vector<Fp>& v) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            Fp c = v[leads_[k]];
            if (c.is_zero()) continue;
            for (int j = 0; j < ncols_; ++j)
                v[j] = v[j] - c * rows_[k][j];
        }
    }
    static int leading(const std::vector<Fp>& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return static_cast<int>(j);
        return -1;
    }

    int ncols_;
    uint32_t p_;
    std::vector<std::vector<Fp>> rows_;
    std::vector<int> leads_;
};

} // namespace nsgp
