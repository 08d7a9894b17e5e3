#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "capacheck/capability.hpp"

namespace capacheck {

struct BudgetError : std::runtime_error {
    uint64_t count;
    explicit BudgetError(uint64_t count)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(count) +
                             " subspaces requested"),
          count(count) {}
};

/// Exact Gaussian binomial [d choose k]_p; throws std::overflow_error
/// past uint64 range.
uint64_t count_subspaces(std::size_t d, uint32_t p, std::size_t k);

/// Total number of subspaces of F_p^d over all dimensions.
uint64_t count_all_subspaces(std::size_t d, uint32_t p);

/// Yields every k-dimensional subspace of F_p^d exactly once: pivot-column
/// sets in lexicographic order, free entries counted in base p, row-major.
class SubspaceIterator {
public:
    SubspaceIterator(std::size_t d, uint32_t p, std::size_t k);

    /// Next subspace, or nullopt when exhausted.
    std::optional<Subspace> next();

    /// All pivot patterns for (d, k) in lexicographic order.
    static std::vector<std::vector<std::size_t>> patterns(std::size_t d, std::size_t k);
    /// Positions (row, col) of the free entries of a pattern, row-major.
    static std::vector<std::pair<std::size_t, std::size_t>>
    free_positions(std::size_t d, const std::vector<std::size_t> &pattern);
    /// The subspace for (pattern, cursor) with cursor counted base p row-major.
    static Subspace at_cursor(std::size_t d, uint32_t p, const std::vector<std::size_t> &pattern,
                              uint64_t cursor);

private:
    std::size_t d_;
    uint32_t p_;
    std::vector<std::vector<std::size_t>> patterns_;
    std::size_t pat_ = 0;
    uint64_t cursor_ = 0;
    uint64_t cursor_count_ = 0;
};

/// Uniform sample from Gr(k, F_p^d): pattern weighted by its cell size,
/// then uniform free entries.
Subspace random_subspace(std::size_t d, uint32_t p, std::size_t k, std::mt19937_64 &rng);

struct CensusCounts {
    uint64_t total = 0;
    uint64_t capable = 0;
    uint64_t non_capable = 0;
};

struct CensusReport {
    std::size_t n;
    uint32_t p;
    std::size_t dim_lo, dim_hi;
    bool sampled = false;
    uint64_t sample_size = 0;
    std::map<std::size_t, CensusCounts> by_dim;
    /// (dim X, dim Y) -> count
    std::map<std::pair<std::size_t, std::size_t>, uint64_t> dimY_hist;
    /// Human-readable audit violations; empty on a passing run.
    std::vector<std::string> violations;

    uint64_t total() const {
        uint64_t t = 0;
        for (auto &[k, c] : by_dim) t += c.total;
        return t;
    }
    uint64_t total_capable() const {
        uint64_t t = 0;
        for (auto &[k, c] : by_dim) t += c.capable;
        return t;
    }
};

struct CensusOptions {
    std::optional<std::size_t> dim_lo, dim_hi;
    uint64_t sample = 0;       // 0 = exhaustive
    uint64_t seed = 0xC0FFEE;
    std::size_t workers = 1;
    uint64_t budget = 100000000; // visit cap for exhaustive runs
    std::string checkpoint;      // resume file; empty = none
};

/// Visit every subspace of V (or a per-dimension sample), run the capability
/// engine, aggregate counts and audit the theorem consequences:
///   (i) dim X <= 2 implies capable
///  (ii) coordinate subspace implies capable
/// (iii) capable implies the Heineken-Nikolova bound
///  (iv) dim X in {1,2} implies dim Y = n dim X
CensusReport census(std::size_t n, uint32_t p, const CensusOptions &opt = {});

/// Histogram of dim Y_X over Gr(k, V): exhaustive when samples == 0.
std::map<std::size_t, uint64_t> dimY_profile(std::size_t n, uint32_t p, std::size_t k,
                                             uint64_t samples = 0, uint64_t seed = 0xC0FFEE);

} // namespace capacheck
