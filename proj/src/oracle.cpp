#include "capacheck/oracle.hpp"

#include <algorithm>

namespace capacheck {

NormalForm::NormalForm(std::size_t n, uint32_t p)
    : n_(n), p_(p), a_(n, 0), b_(dim_v(n), 0), c_(dim_w(n), 0) {
    if (n < 1) throw ParamError("need at least 1 generator");
    check_modulus(p);
}

std::size_t NormalForm::pair_col(std::size_t j, std::size_t i) const {
    // pairs in (i, j)-lex order
    std::size_t off = 0;
    for (std::size_t t = 1; t < i; ++t) off += n_ - t;
    return off + (j - i - 1);
}

std::size_t NormalForm::triple_col(std::size_t j, std::size_t i, std::size_t k) const {
    // triples in (i, j, k)-lex order; block for fixed i has (n-i) * (n-i+1) cells
    std::size_t off = 0;
    for (std::size_t t = 1; t < i; ++t) off += (n_ - t) * (n_ - t + 1);
    return off + (j - i - 1) * (n_ - i + 1) + (k - i);
}

NormalForm NormalForm::generator(std::size_t n, uint32_t p, std::size_t i, int64_t e) {
    NormalForm nf(n, p);
    if (i < 1 || i > n) throw ParamError("generator index out of range");
    nf.a_[i - 1] = fp_reduce(e, p);
    return nf;
}

NormalForm NormalForm::basic_pair(std::size_t n, uint32_t p, std::size_t j, std::size_t i) {
    NormalForm nf(n, p);
    if (!(1 <= i && i < j && j <= n)) throw ParamError("invalid pair index");
    nf.b_[nf.pair_col(j, i)] = 1;
    return nf;
}

NormalForm NormalForm::from_pair_vector(std::size_t n, uint32_t p,
                                        const std::vector<uint32_t> &b) {
    NormalForm nf(n, p);
    if (b.size() != dim_v(n)) throw DimMismatchError("pair vector length mismatch");
    for (std::size_t c = 0; c < b.size(); ++c) nf.b_[c] = b[c] % p;
    return nf;
}

bool NormalForm::is_identity() const {
    auto zero = [](const std::vector<uint32_t> &v) {
        return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
    };
    return zero(a_) && zero(b_) && zero(c_);
}

void NormalForm::mul_generator(std::size_t r, int64_t e64) {
    if (r < 1 || r > n_) throw ParamError("generator index out of range");
    const uint32_t p = p_;
    const uint32_t e = fp_reduce(e64, p);
    if (e == 0) return;

    // [B, x_r^e]: each [x_j,x_i]^b contributes [x_j,x_i,x_r]^{b e}, rewritten
    // to basic form when r < i via [x_j,x_i,x_r] = [x_j,x_r,x_i][x_i,x_r,x_j]^{-1}.
    std::size_t col = 0;
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = i + 1; j <= n_; ++j, ++col) {
            uint32_t bv = b_[col];
            if (bv == 0) continue;
            uint32_t m = fp_mul(bv, e, p);
            if (r >= i) {
                std::size_t t = triple_col(j, i, r);
                c_[t] = fp_add(c_[t], m, p);
            } else {
                std::size_t t1 = triple_col(j, r, i);
                std::size_t t2 = triple_col(i, r, j);
                c_[t1] = fp_add(c_[t1], m, p);
                c_[t2] = fp_sub(c_[t2], m, p);
            }
        }

    // Move x_r^e left past x_j^{a_j}, j > r. The swap emits
    //   [x_j^{a_j}, x_r^e] = [x_j,x_r]^{a_j e} [x_j,x_r,x_j]^{e C(a_j,2)}
    //                        [x_j,x_r,x_r]^{a_j C(e,2)},
    // and the pair part then commutes past x_k^{a_k}, k > j, emitting
    // [x_j,x_r,x_k]^{a_j e a_k}.
    for (std::size_t j = r + 1; j <= n_; ++j) {
        uint32_t A = a_[j - 1];
        if (A == 0) continue;
        uint32_t m = fp_mul(A, e, p);
        std::size_t pc = pair_col(j, r);
        b_[pc] = fp_add(b_[pc], m, p);
        std::size_t tj = triple_col(j, r, j);
        c_[tj] = fp_add(c_[tj], fp_mul(e, fp_binom2(A, p), p), p);
        std::size_t tr = triple_col(j, r, r);
        c_[tr] = fp_add(c_[tr], fp_mul(A, fp_binom2(e, p), p), p);
        for (std::size_t k = j + 1; k <= n_; ++k) {
            if (a_[k - 1] == 0) continue;
            std::size_t tk = triple_col(j, r, k);
            c_[tk] = fp_add(c_[tk], fp_mul(m, a_[k - 1], p), p);
        }
    }

    a_[r - 1] = fp_add(a_[r - 1], e, p);
}

NormalForm multiply(const NormalForm &u, const NormalForm &v) {
    if (u.n_ != v.n_ || u.p_ != v.p_) throw ParamError("parameter mismatch in multiply");
    NormalForm w = u;
    for (std::size_t i = 1; i <= v.n_; ++i) w.mul_generator(i, v.a_[i - 1]);
    // K_2 parts combine freely modulo the center, K_3 parts are central.
    for (std::size_t c = 0; c < w.b_.size(); ++c) w.b_[c] = fp_add(w.b_[c], v.b_[c], w.p_);
    for (std::size_t c = 0; c < w.c_.size(); ++c) w.c_[c] = fp_add(w.c_[c], v.c_[c], w.p_);
    return w;
}

NormalForm inverse(const NormalForm &u) {
    NormalForm w(u.n_, u.p_);
    for (std::size_t c = 0; c < w.b_.size(); ++c) w.b_[c] = fp_neg(u.b_[c], u.p_);
    for (std::size_t c = 0; c < w.c_.size(); ++c) w.c_[c] = fp_neg(u.c_[c], u.p_);
    for (std::size_t i = u.n_; i >= 1; --i)
        w.mul_generator(i, static_cast<int64_t>(u.p_) - u.a_[i - 1]);
    return w;
}

NormalForm commutator(const NormalForm &u, const NormalForm &v) {
    return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

NormalForm power(const NormalForm &u, int64_t e) {
    NormalForm base = e < 0 ? inverse(u) : u;
    uint64_t k = e < 0 ? static_cast<uint64_t>(-e) : static_cast<uint64_t>(e);
    NormalForm acc(u.n(), u.p());
    while (k) {
        if (k & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return acc;
}

NormalForm evaluate_word(std::size_t n, uint32_t p, const Word &w) {
    NormalForm nf(n, p);
    for (auto [g, e] : w.letters) nf.mul_generator(g, e);
    return nf;
}

bool phi_crosscheck(const PhiStructure &ps) {
    const std::size_t n = ps.n();
    const uint32_t p = ps.p();
    for (const auto &pr : ps.pairs()) {
        NormalForm base = NormalForm::basic_pair(n, p, pr.j, pr.i);
        std::size_t col = ps.pair_to_col(pr.j, pr.i);
        for (std::size_t r = 1; r <= n; ++r) {
            NormalForm cm = commutator(base, NormalForm::generator(n, p, r));
            for (uint32_t x : cm.a())
                if (x != 0) return false;
            for (uint32_t x : cm.b())
                if (x != 0) return false;
            for (std::size_t t = 0; t < ps.dimW(); ++t)
                if (cm.c()[t] != ps.phi(r).at(t, col)) return false;
        }
    }
    return true;
}

Subspace group_level_YX(const PhiStructure &ps, const Subspace &X) {
    if (X.ambient_dim() != ps.dimV() || X.modulus() != ps.p())
        throw DimMismatchError("X must live in V");
    FpMatrix gens(X.dim() * ps.n(), ps.dimW(), ps.p());
    std::size_t row = 0;
    for (std::size_t b = 0; b < X.dim(); ++b) {
        NormalForm k = NormalForm::from_pair_vector(ps.n(), ps.p(), X.basis().row(b));
        for (std::size_t r = 1; r <= ps.n(); ++r) {
            NormalForm cm = commutator(k, NormalForm::generator(ps.n(), ps.p(), r));
            for (std::size_t t = 0; t < ps.dimW(); ++t) gens.at(row, t) = cm.c()[t];
            ++row;
        }
    }
    return Subspace(gens);
}

} // namespace capacheck
