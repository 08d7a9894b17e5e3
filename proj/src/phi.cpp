#include "capacheck/phi.hpp"

namespace capacheck {

std::vector<PairIndex> pair_order(std::size_t n) {
    std::vector<PairIndex> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) out.push_back({j, i});
    return out;
}

std::vector<TripleIndex> triple_order(std::size_t n) {
    std::vector<TripleIndex> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = i; k <= n; ++k) out.push_back({j, i, k});
    return out;
}

PhiStructure::PhiStructure(std::size_t n, uint32_t p) : n_(n), p_(p) {
    if (n < 2) throw ParamError("need at least 2 generators, got " + std::to_string(n));
    check_modulus(p);
    pairs_ = pair_order(n);
    triples_ = triple_order(n);
    for (std::size_t c = 0; c < pairs_.size(); ++c)
        pair_col_[{pairs_[c].j, pairs_[c].i}] = c;
    for (std::size_t c = 0; c < triples_.size(); ++c)
        triple_col_[{triples_[c].j, triples_[c].i, triples_[c].k}] = c;

    for (std::size_t r = 1; r <= n; ++r) {
        FpMatrix m(dimW(), dimV(), p);
        for (std::size_t c = 0; c < pairs_.size(); ++c) {
            auto [j, i] = pairs_[c];
            if (r >= i) {
                m.at(triple_to_col(j, i, r), c) = 1;
            } else {
                m.at(triple_to_col(j, r, i), c) = 1;
                m.at(triple_to_col(i, r, j), c) = p - 1;
            }
        }
        phi_.push_back(std::move(m));
    }
}

std::size_t PhiStructure::pair_to_col(std::size_t j, std::size_t i) const {
    auto it = pair_col_.find({j, i});
    if (it == pair_col_.end())
        throw ParamError("invalid pair index (" + std::to_string(j) + "," + std::to_string(i) + ")");
    return it->second;
}

std::size_t PhiStructure::triple_to_col(std::size_t j, std::size_t i, std::size_t k) const {
    auto it = triple_col_.find({j, i, k});
    if (it == triple_col_.end())
        throw ParamError("invalid triple index (" + std::to_string(j) + "," + std::to_string(i) +
                         "," + std::to_string(k) + ")");
    return it->second;
}

const FpMatrix &PhiStructure::phi(std::size_t r) const {
    if (r < 1 || r > n_) throw ParamError("generator index out of range");
    return phi_[r - 1];
}

} // namespace capacheck
