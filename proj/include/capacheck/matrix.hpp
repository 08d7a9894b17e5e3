#pragma once

#include <cstddef>
#include <vector>

#include "capacheck/fp.hpp"

namespace capacheck {

/// Dense matrix over F_p, row-major, entries stored as residues in [0, p).
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, uint32_t p)
        : rows_(rows), cols_(cols), p_(p), entries_(rows * cols, 0) {
        check_modulus(p);
    }

    static FpMatrix identity(std::size_t n, uint32_t p) {
        FpMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    uint32_t modulus() const { return p_; }

    uint32_t &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, int64_t v) { at(r, c) = fp_reduce(v, p_); }

    std::vector<uint32_t> row(std::size_t r) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    bool operator==(const FpMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && entries_ == o.entries_;
    }
    bool operator!=(const FpMatrix &o) const { return !(*this == o); }

    /// Matrix product; throws on shape or modulus mismatch.
    FpMatrix operator*(const FpMatrix &o) const;

    /// Matrix-vector product.
    std::vector<uint32_t> apply(const std::vector<uint32_t> &v) const;

    /// Stack rows of `o` below this matrix (same cols, same p).
    FpMatrix vstack(const FpMatrix &o) const;

private:
    std::size_t rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> entries_;
};

struct RrefResult {
    FpMatrix mat;
    std::size_t rank;
    std::vector<std::size_t> pivots; // strictly increasing column indices
};

/// Unique reduced row-echelon form; row space preserved.
RrefResult rref(const FpMatrix &m);

} // namespace capacheck
