#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "capacheck/matrix.hpp"

namespace capacheck {

/// Index of a degree-2 basis vector v_ji, 1 <= i < j <= n.
struct PairIndex {
    std::size_t j, i;
    bool operator==(const PairIndex &o) const { return j == o.j && i == o.i; }
};

/// Index of a degree-3 basis vector w_jik, 1 <= i < j <= n, i <= k <= n.
struct TripleIndex {
    std::size_t j, i, k;
    bool operator==(const TripleIndex &o) const { return j == o.j && i == o.i && k == o.k; }
};

/// Pairs in lexicographic (i, j) order: (2,1),(3,1),...,(n,1),(3,2),...
std::vector<PairIndex> pair_order(std::size_t n);

/// Triples in lexicographic (i, j, k) order.
std::vector<TripleIndex> triple_order(std::size_t n);

inline std::size_t dim_v(std::size_t n) { return n * (n - 1) / 2; }
inline std::size_t dim_w(std::size_t n) {
    // 2(C(n,2) + C(n,3))
    return 2 * (n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6);
}

/// The spaces V (degree-2 coordinates) and W (degree-3 coordinates) for a
/// fixed (n, p), together with the matrices of the commutation maps
/// phi_1..phi_n : V -> W, where
///   phi_r(v_ji) = w_jir          if r >= i,
///   phi_r(v_ji) = w_jri - w_irj  if r < i.
/// Immutable after construction.
class PhiStructure {
public:
    PhiStructure(std::size_t n, uint32_t p);

    std::size_t n() const { return n_; }
    uint32_t p() const { return p_; }
    std::size_t dimV() const { return pairs_.size(); }
    std::size_t dimW() const { return triples_.size(); }

    const std::vector<PairIndex> &pairs() const { return pairs_; }
    const std::vector<TripleIndex> &triples() const { return triples_; }

    /// Column index of v_ji; throws on invalid (j, i).
    std::size_t pair_to_col(std::size_t j, std::size_t i) const;
    /// Column index of w_jik; throws on invalid (j, i, k).
    std::size_t triple_to_col(std::size_t j, std::size_t i, std::size_t k) const;

    /// Matrix of phi_r (dimW x dimV), generators numbered 1..n.
    const FpMatrix &phi(std::size_t r) const;

private:
    std::size_t n_;
    uint32_t p_;
    std::vector<PairIndex> pairs_;
    std::vector<TripleIndex> triples_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_col_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> triple_col_;
    std::vector<FpMatrix> phi_;
};

} // namespace capacheck
