#include "capacheck/subspace.hpp"

namespace capacheck {

Subspace::Subspace(std::size_t ambient, uint32_t p) : basis_(0, ambient, p) {}

Subspace::Subspace(const FpMatrix &gens) : basis_(0, gens.cols(), gens.modulus()) {
    RrefResult r = rref(gens);
    FpMatrix b(r.rank, gens.cols(), gens.modulus());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j) b.at(i, j) = r.mat.at(i, j);
    basis_ = std::move(b);
    pivots_ = std::move(r.pivots);
}

Subspace Subspace::full(std::size_t ambient, uint32_t p) {
    return Subspace(FpMatrix::identity(ambient, p));
}

Subspace Subspace::span(const std::vector<uint32_t> &v, uint32_t p) {
    FpMatrix m(1, v.size(), p);
    for (std::size_t j = 0; j < v.size(); ++j) m.set(0, j, v[j]);
    return Subspace(m);
}

std::vector<uint32_t> Subspace::reduce(std::vector<uint32_t> v) const {
    if (v.size() != ambient_dim()) throw DimMismatchError("vector length mismatch in reduce");
    const uint32_t p = modulus();
    for (std::size_t i = 0; i < dim(); ++i) {
        uint32_t f = v[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = fp_sub(v[j], fp_mul(f, basis_.at(i, j), p), p);
    }
    return v;
}

bool Subspace::contains(const std::vector<uint32_t> &v) const {
    std::vector<uint32_t> r = reduce(v);
    for (uint32_t x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace &o) const {
    if (o.ambient_dim() != ambient_dim()) throw DimMismatchError("ambient mismatch in contains");
    for (std::size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

Subspace subspace_sum(const Subspace &a, const Subspace &b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus())
        throw DimMismatchError("ambient mismatch in subspace_sum");
    return Subspace(a.basis().vstack(b.basis()));
}

Subspace kernel(const FpMatrix &m) {
    RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    const uint32_t p = m.modulus();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    FpMatrix gens(cols - r.rank, cols, p);
    std::size_t row = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        gens.at(row, f) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            gens.at(row, r.pivots[i]) = fp_neg(r.mat.at(i, f), p);
        ++row;
    }
    return Subspace(gens);
}

FpMatrix annihilator(const Subspace &s) {
    return kernel(s.basis()).basis();
}

Subspace subspace_intersection(const Subspace &a, const Subspace &b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus())
        throw DimMismatchError("ambient mismatch in subspace_intersection");
    return kernel(annihilator(a).vstack(annihilator(b)));
}

Subspace preimage(const FpMatrix &map, const Subspace &target) {
    if (map.rows() != target.ambient_dim() || map.modulus() != target.modulus())
        throw DimMismatchError("map codomain does not match target ambient");
    // Q has kernel exactly `target`, so ker(Q map) = {v : map v in target}.
    FpMatrix q = annihilator(target);
    return kernel(q * map);
}

} // namespace capacheck
