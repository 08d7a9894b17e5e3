#pragma once

#include "capacheck/phi.hpp"
#include "capacheck/subspace.hpp"

namespace capacheck {

/// A word in the generators: sequence of (generator index 1..n, exponent).
struct Word {
    std::vector<std::pair<std::size_t, int64_t>> letters;
};

/// Element of K, the class-3 nilpotent product of n cyclic groups of order
/// p with [K,K] of exponent p, in its unique normal form
///   x_1^{a_1} ... x_n^{a_n} * prod [x_j,x_i]^{b_ji} * prod [x_j,x_i,x_k]^{c_jik}
/// with all exponents mod p. Pair/triple coordinates follow the canonical
/// orders of pair_order(n) / triple_order(n).
class NormalForm {
public:
    NormalForm(std::size_t n, uint32_t p);

    static NormalForm generator(std::size_t n, uint32_t p, std::size_t i, int64_t e = 1);
    /// The basic commutator [x_j, x_i], i < j.
    static NormalForm basic_pair(std::size_t n, uint32_t p, std::size_t j, std::size_t i);
    /// An element of K_2 mod K_3 with the given pair exponents.
    static NormalForm from_pair_vector(std::size_t n, uint32_t p,
                                       const std::vector<uint32_t> &b);

    std::size_t n() const { return n_; }
    uint32_t p() const { return p_; }
    const std::vector<uint32_t> &a() const { return a_; }
    const std::vector<uint32_t> &b() const { return b_; }
    const std::vector<uint32_t> &c() const { return c_; }

    bool is_identity() const;
    bool operator==(const NormalForm &o) const {
        return n_ == o.n_ && p_ == o.p_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }
    bool operator!=(const NormalForm &o) const { return !(*this == o); }

    /// Right-multiply by x_r^e and re-collect into normal form.
    void mul_generator(std::size_t r, int64_t e);

    friend NormalForm multiply(const NormalForm &u, const NormalForm &v);
    friend NormalForm inverse(const NormalForm &u);

private:
    std::size_t n_;
    uint32_t p_;
    std::vector<uint32_t> a_, b_, c_;
    std::size_t pair_col(std::size_t j, std::size_t i) const;
    std::size_t triple_col(std::size_t j, std::size_t i, std::size_t k) const;
};

NormalForm multiply(const NormalForm &u, const NormalForm &v);
NormalForm inverse(const NormalForm &u);
NormalForm commutator(const NormalForm &u, const NormalForm &v);
NormalForm power(const NormalForm &u, int64_t e);
NormalForm evaluate_word(std::size_t n, uint32_t p, const Word &w);

/// True iff for every pair (j,i) and every generator r, the commutator
/// [[x_j,x_i], x_r] computed by collection has c-coordinates equal to the
/// column of phi_r at v_ji.
bool phi_crosscheck(const PhiStructure &ps);

/// Span in c-coordinates of {[k_b, x_r]} over the basis vectors b of X and
/// all generators r; the group-level rendering of Y_X.
Subspace group_level_YX(const PhiStructure &ps, const Subspace &X);

} // namespace capacheck
