#pragma once

#include "capacheck/phi.hpp"
#include "capacheck/subspace.hpp"

namespace capacheck {

/// Everything the capability criterion produces for one subspace X of V.
/// Invariants: X is contained in Z; capable iff X == Z iff witnesses empty.
struct CapabilityReport {
    std::size_t n;
    uint32_t p;
    Subspace X;
    Subspace Y; // span of the phi_r images of X, inside W
    Subspace Z; // joint preimage intersection, inside V
    bool capable;
    /// Basis vectors of Z reduced modulo X, sorted by leading coordinate;
    /// empty iff capable.
    std::vector<std::vector<uint32_t>> witnesses;
    std::size_t central_dim;  // r = dim Z(G)/[G,G]
    bool hn_ok;               // Heineken-Nikolova necessary bound
    bool sufficient_hit;      // dim X <= 2 fast-path flag (advisory)
};

/// Y_X = <phi_1(X), ..., phi_n(X)>.
Subspace compute_Y(const PhiStructure &ps, const Subspace &X);

/// Z_X = intersection over r of phi_r^{-1}(Y_X). Always contains X.
Subspace compute_Z(const PhiStructure &ps, const Subspace &X);

/// Full report: Y, Z, verdict, witnesses, central dimension, bound flags.
CapabilityReport is_capable(const PhiStructure &ps, const Subspace &X);

/// {a in F_p^n : the image of prod x_i^{a_i} commutes with every generator
/// modulo N}, i.e. for every r the V-vector sum_i a_i c(i, r) lies in X,
/// where c(i, r) is the V-image of [x_i, x_r]. Its dimension is
/// r = dim Z(G)/[G,G].
Subspace central_coefficient_space(const PhiStructure &ps, const Subspace &X);

struct ReducedInstance {
    std::size_t m;        // generators of the reduced group K with Z(K)=[K,K]
    std::size_t r;        // number of split-off central C_p factors
    Subspace X_reduced;   // subspace over V corresponding to m generators
    bool capable;         // verdict derived from the reduced instance
};

/// Split G as K + C_p^r with Z(K) = [K,K] and decide capability from K.
/// Throws std::logic_error if the transported subspace fails to split
/// (which the theory rules out).
ReducedInstance reduce_special(const PhiStructure &ps, const Subspace &X);

/// Necessary condition: with m = dim(G/Z(G)) and k = dim[G,G],
/// k >= ceil((-3 + sqrt(9 + 8m)) / 2). Every capable X must pass.
bool hn_bound_check(const PhiStructure &ps, const Subspace &X);

/// Smallest integer k with k^2 + 3k >= 2m (the closed-form ceiling above).
std::size_t hn_lower_bound(std::size_t m);

/// True iff every basis vector of X is a standard basis vector of V.
bool is_coordinate_subspace(const Subspace &X);

} // namespace capacheck
