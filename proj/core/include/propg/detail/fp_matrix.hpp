#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "propg/padic.hpp"

namespace propg::detail {

// Dense matrix over the field with p elements; just enough linear algebra
// for rank and dependency witnesses.
class FpMatrix {
public:
    FpMatrix(uint64_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    uint64_t prime() const { return p_; }

    FpMatrix transposed() const {
        FpMatrix t(p_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    std::size_t rank() const {
        FpMatrix w = *this;
        return w.eliminate();
    }

    // a nonzero vector v with v * M = 0 (a dependency among the rows), if any
    std::optional<std::vector<uint64_t>> left_kernel_vector() const {
        return transposed().kernel_vector();
    }

    // a nonzero vector v with M * v = 0, if any
    std::optional<std::vector<uint64_t>> kernel_vector() const {
        FpMatrix w = *this;
        std::vector<std::size_t> pivot_col;
        w.eliminate(&pivot_col);
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_col)
            is_pivot[c] = true;
        std::size_t free_col = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) {
                free_col = c;
                break;
            }
        if (free_col == cols_)
            return std::nullopt;
        std::vector<uint64_t> v(cols_, 0);
        v[free_col] = 1;
        // rows of w are in echelon form with unit pivots
        for (std::size_t r = pivot_col.size(); r-- > 0;) {
            uint64_t s = w.at(r, free_col) % p_;
            v[pivot_col[r]] = s == 0 ? 0 : p_ - s;
        }
        return v;
    }

private:
    // Gauss-Jordan; returns rank, optionally records pivot columns.
    std::size_t eliminate(std::vector<std::size_t>* pivots = nullptr) {
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pr = rows_;
            for (std::size_t r = rank; r < rows_; ++r)
                if (at(r, c) % p_ != 0) {
                    pr = r;
                    break;
                }
            if (pr == rows_)
                continue;
            for (std::size_t k = 0; k < cols_; ++k)
                std::swap(at(rank, k), at(pr, k));
            uint64_t inv = inv_mod(at(rank, c) % p_, p_);
            for (std::size_t k = 0; k < cols_; ++k)
                at(rank, k) = mul_mod(at(rank, k) % p_, inv, p_);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank)
                    continue;
                uint64_t f = at(r, c) % p_;
                if (f == 0)
                    continue;
                for (std::size_t k = 0; k < cols_; ++k)
                    at(r, k) = sub_mod(at(r, k) % p_, mul_mod(f, at(rank, k), p_), p_);
            }
            if (pivots)
                pivots->push_back(c);
            ++rank;
        }
        return rank;
    }

    uint64_t p_;
    std::size_t rows_, cols_;
    std::vector<uint64_t> a_;
};

} // namespace propg::detail
