#include "capacheck/matrix.hpp"

namespace capacheck {

FpMatrix FpMatrix::operator*(const FpMatrix &o) const {
    if (p_ != o.p_) throw FieldError("modulus mismatch in matrix product");
    if (cols_ != o.rows_) throw DimMismatchError("shape mismatch in matrix product");
    FpMatrix out(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            uint32_t aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) = fp_add(out.at(i, j), fp_mul(aik, o.at(k, j), p_), p_);
        }
    return out;
}

std::vector<uint32_t> FpMatrix::apply(const std::vector<uint32_t> &v) const {
    if (v.size() != cols_) throw DimMismatchError("vector length mismatch in apply");
    std::vector<uint32_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += static_cast<uint64_t>(at(i, j)) * v[j];
        out[i] = static_cast<uint32_t>(acc % p_);
    }
    return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix &o) const {
    if (p_ != o.p_) throw FieldError("modulus mismatch in vstack");
    if (cols_ != o.cols_) throw DimMismatchError("column count mismatch in vstack");
    FpMatrix out(rows_ + o.rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
    return out;
}

RrefResult rref(const FpMatrix &m) {
    FpMatrix a = m;
    const uint32_t p = a.modulus();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        uint32_t inv = fp_inv(a.at(r, c), p);
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) = fp_mul(a.at(r, j), inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t f = a.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a.at(i, j) = fp_sub(a.at(i, j), fp_mul(f, a.at(r, j), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

} // namespace capacheck
