#include "capacheck/capability.hpp"

#include <algorithm>
#include <stdexcept>

namespace capacheck {

Subspace compute_Y(const PhiStructure &ps, const Subspace &X) {
    if (X.ambient_dim() != ps.dimV() || X.modulus() != ps.p())
        throw DimMismatchError("X must live in V");
    FpMatrix gens(ps.n() * X.dim(), ps.dimW(), ps.p());
    std::size_t row = 0;
    for (std::size_t r = 1; r <= ps.n(); ++r)
        for (std::size_t b = 0; b < X.dim(); ++b) {
            std::vector<uint32_t> img = ps.phi(r).apply(X.basis().row(b));
            for (std::size_t c = 0; c < img.size(); ++c) gens.at(row, c) = img[c];
            ++row;
        }
    return Subspace(gens);
}

Subspace compute_Z(const PhiStructure &ps, const Subspace &X) {
    Subspace Y = compute_Y(ps, X);
    Subspace Z = preimage(ps.phi(1), Y);
    for (std::size_t r = 2; r <= ps.n(); ++r)
        Z = subspace_intersection(Z, preimage(ps.phi(r), Y));
    return Z;
}

bool is_coordinate_subspace(const Subspace &X) {
    for (std::size_t i = 0; i < X.dim(); ++i) {
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < X.ambient_dim(); ++j)
            if (X.basis().at(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

Subspace central_coefficient_space(const PhiStructure &ps, const Subspace &X) {
    const std::size_t n = ps.n();
    const uint32_t p = ps.p();
    // Column i-1 of M_r is the V-image of [x_i, x_r].
    Subspace acc = Subspace::full(n, p);
    for (std::size_t r = 1; r <= n; ++r) {
        FpMatrix m(ps.dimV(), n, p);
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == r) continue;
            if (r < i)
                m.at(ps.pair_to_col(i, r), i - 1) = 1;
            else
                m.at(ps.pair_to_col(r, i), i - 1) = p - 1;
        }
        acc = subspace_intersection(acc, preimage(m, X));
    }
    return acc;
}

std::size_t hn_lower_bound(std::size_t m) {
    std::size_t k = 0;
    while (k * k + 3 * k < 2 * m) ++k;
    return k;
}

bool hn_bound_check(const PhiStructure &ps, const Subspace &X) {
    std::size_t r = central_coefficient_space(ps, X).dim();
    std::size_t m = ps.n() - r;
    std::size_t k = ps.dimV() - X.dim();
    return k >= hn_lower_bound(m);
}

CapabilityReport is_capable(const PhiStructure &ps, const Subspace &X) {
    Subspace Y = compute_Y(ps, X);
    Subspace Z = preimage(ps.phi(1), Y);
    for (std::size_t r = 2; r <= ps.n(); ++r)
        Z = subspace_intersection(Z, preimage(ps.phi(r), Y));

    bool capable = (Z == X);
    // A basis of Z modulo X: grow the span so the witnesses stay independent.
    std::vector<std::vector<uint32_t>> witnesses;
    Subspace span = X;
    for (std::size_t i = 0; i < Z.dim(); ++i) {
        std::vector<uint32_t> w = span.reduce(Z.basis().row(i));
        if (std::any_of(w.begin(), w.end(), [](uint32_t x) { return x != 0; })) {
            FpMatrix one(1, ps.dimV(), ps.p());
            for (std::size_t j = 0; j < w.size(); ++j) one.at(0, j) = w[j];
            span = subspace_sum(span, Subspace(one));
            witnesses.push_back(std::move(w));
        }
    }
    auto leading = [](const std::vector<uint32_t> &v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) return j;
        return v.size();
    };
    std::sort(witnesses.begin(), witnesses.end(),
              [&](const auto &a, const auto &b) { return leading(a) < leading(b); });

    std::size_t central = central_coefficient_space(ps, X).dim();
    std::size_t m = ps.n() - central;
    std::size_t k = ps.dimV() - X.dim();
    return CapabilityReport{ps.n(),    ps.p(), X, std::move(Y), std::move(Z), capable,
                            std::move(witnesses), central, k >= hn_lower_bound(m),
                            X.dim() <= 2};
}

ReducedInstance reduce_special(const PhiStructure &ps, const Subspace &X) {
    const std::size_t n = ps.n();
    const uint32_t p = ps.p();
    Subspace central = central_coefficient_space(ps, X);
    const std::size_t r = central.dim();
    const std::size_t m = n - r;

    if (r == 0) {
        bool cap = (compute_Z(ps, X) == X);
        return {n, 0, X, cap};
    }

    // Generator change P: first m columns are the standard basis vectors not
    // hit by a pivot of the central space, last r columns its basis.
    FpMatrix P(n, n, p);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : central.pivot_cols()) is_pivot[c] = true;
    std::size_t col = 0;
    for (std::size_t t = 0; t < n; ++t)
        if (!is_pivot[t]) P.at(t, col++) = 1;
    for (std::size_t b = 0; b < r; ++b, ++col)
        for (std::size_t row = 0; row < n; ++row) P.at(row, col) = central.basis().at(b, row);

    // Induced map on V: the (a,b) coordinate of the image of v'_ts is
    // P_at P_bs - P_bt P_as (alternating square, pairs with a > b, t > s).
    FpMatrix L(ps.dimV(), ps.dimV(), p);
    const auto &pairs = ps.pairs();
    for (std::size_t cc = 0; cc < pairs.size(); ++cc) {
        auto [t, s] = pairs[cc]; // t > s, 1-based
        for (std::size_t rr = 0; rr < pairs.size(); ++rr) {
            auto [a, b] = pairs[rr];
            uint32_t v = fp_sub(fp_mul(P.at(a - 1, t - 1), P.at(b - 1, s - 1), p),
                                fp_mul(P.at(b - 1, t - 1), P.at(a - 1, s - 1), p), p);
            L.at(rr, cc) = v;
        }
    }

    // Transport X to the new generating set.
    Subspace Xprime = preimage(L, X);

    // Split off the coordinates touching a central generator (larger index > m).
    FpMatrix tail_gens(0, ps.dimV(), p);
    std::vector<std::size_t> small_cols;
    {
        std::vector<std::vector<uint32_t>> tail;
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            if (pairs[c].j > m) {
                std::vector<uint32_t> e(ps.dimV(), 0);
                e[c] = 1;
                tail.push_back(std::move(e));
            } else {
                small_cols.push_back(c);
            }
        }
        tail_gens = FpMatrix(tail.size(), ps.dimV(), p);
        for (std::size_t i = 0; i < tail.size(); ++i)
            for (std::size_t j = 0; j < ps.dimV(); ++j) tail_gens.at(i, j) = tail[i][j];
    }
    Subspace tail(tail_gens);
    if (!Xprime.contains(tail))
        throw std::logic_error("reduce_special: central coordinate vectors missing from X'");

    FpMatrix small_id(small_cols.size(), ps.dimV(), p);
    for (std::size_t i = 0; i < small_cols.size(); ++i) small_id.at(i, small_cols[i]) = 1;
    Subspace Xsplit = subspace_intersection(Xprime, Subspace(small_id));
    if (Xsplit.dim() + tail.dim() != Xprime.dim())
        throw std::logic_error("reduce_special: transported subspace does not split");

    // Re-express on the pair coordinates of the m-generator space.
    std::size_t dv_m = m >= 2 ? m * (m - 1) / 2 : 0;
    FpMatrix reduced_gens(Xsplit.dim(), dv_m, p);
    for (std::size_t i = 0; i < Xsplit.dim(); ++i)
        for (std::size_t c = 0; c < small_cols.size(); ++c)
            reduced_gens.at(i, c) = Xsplit.basis().at(i, small_cols[c]);
    Subspace Xr(reduced_gens);

    bool cap;
    if (m <= 1) {
        // The reduced group is abelian: capable iff not cyclic.
        cap = (m + r >= 2);
    } else {
        PhiStructure ps_m(m, p);
        cap = (compute_Z(ps_m, Xr) == Xr);
    }
    return {m, r, std::move(Xr), cap};
}

} // namespace capacheck
