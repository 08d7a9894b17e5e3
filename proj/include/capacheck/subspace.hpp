#pragma once

#include "capacheck/matrix.hpp"

namespace capacheck {

/// Canonically represented subspace of F_p^d: the basis is the unique RREF
/// of any generating matrix, with zero rows dropped. Two Subspace values
/// are equal as sets iff they compare equal componentwise.
class Subspace {
public:
    /// Zero subspace of F_p^ambient.
    Subspace(std::size_t ambient, uint32_t p);

    /// Span of the rows of `gens` (gens.cols() is the ambient dimension).
    explicit Subspace(const FpMatrix &gens);

    /// Full space F_p^ambient.
    static Subspace full(std::size_t ambient, uint32_t p);

    /// Span of a single vector.
    static Subspace span(const std::vector<uint32_t> &v, uint32_t p);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    uint32_t modulus() const { return basis_.modulus(); }
    const FpMatrix &basis() const { return basis_; }
    const std::vector<std::size_t> &pivot_cols() const { return pivots_; }

    bool operator==(const Subspace &o) const {
        return basis_ == o.basis_; // canonical form makes this set equality
    }
    bool operator!=(const Subspace &o) const { return !(*this == o); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    /// True iff v lies in the row space, decided by reduction against the basis.
    bool contains(const std::vector<uint32_t> &v) const;

    /// Reduce v modulo this subspace (eliminate the pivot coordinates).
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;

    bool contains(const Subspace &o) const;

private:
    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical span of the union of the bases.
Subspace subspace_sum(const Subspace &a, const Subspace &b);

/// {v : v in a and v in b}, via stacked annihilators and one kernel.
Subspace subspace_intersection(const Subspace &a, const Subspace &b);

/// Right kernel {v : m v = 0}; dim = cols - rank.
Subspace kernel(const FpMatrix &m);

/// Basis matrix of the annihilator of s under the standard bilinear form.
/// kernel of the returned matrix is exactly s.
FpMatrix annihilator(const Subspace &s);

/// {v : map v in target}; map codomain dim must equal target's ambient dim.
Subspace preimage(const FpMatrix &map, const Subspace &target);

} // namespace capacheck
