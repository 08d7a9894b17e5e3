#include "capacheck/enumerate.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace capacheck {

uint64_t count_subspaces(std::size_t d, uint32_t p, std::size_t k) {
    if (k > d) throw std::out_of_range("k must satisfy 0 <= k <= d");
    unsigned __int128 r = 1;
    auto pw = [&](std::size_t e) {
        unsigned __int128 v = 1;
        for (std::size_t t = 0; t < e; ++t) {
            v *= p;
            if (v > (static_cast<unsigned __int128>(1) << 100))
                throw std::overflow_error("Gaussian binomial overflow");
        }
        return v;
    };
    for (std::size_t i = 0; i < k; ++i) {
        r *= pw(d - i) - 1;
        r /= pw(i + 1) - 1; // running product is [d choose i+1]_p, an integer
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("Gaussian binomial overflow");
    }
    return static_cast<uint64_t>(r);
}

uint64_t count_all_subspaces(std::size_t d, uint32_t p) {
    uint64_t t = 0;
    for (std::size_t k = 0; k <= d; ++k) t += count_subspaces(d, p, k);
    return t;
}

std::vector<std::vector<std::size_t>> SubspaceIterator::patterns(std::size_t d, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > d) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        if (k == 0) break;
        // lexicographic successor of the combination
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == d - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
SubspaceIterator::free_positions(std::size_t d, const std::vector<std::size_t> &pattern) {
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pattern) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < pattern.size(); ++r)
        for (std::size_t c = pattern[r] + 1; c < d; ++c)
            if (!is_pivot[c]) out.emplace_back(r, c);
    return out;
}

Subspace SubspaceIterator::at_cursor(std::size_t d, uint32_t p,
                                     const std::vector<std::size_t> &pattern, uint64_t cursor) {
    auto free = free_positions(d, pattern);
    FpMatrix m(pattern.size(), d, p);
    for (std::size_t r = 0; r < pattern.size(); ++r) m.at(r, pattern[r]) = 1;
    // last free position is the fastest-changing digit
    for (std::size_t t = free.size(); t-- > 0;) {
        m.at(free[t].first, free[t].second) = static_cast<uint32_t>(cursor % p);
        cursor /= p;
    }
    return Subspace(m);
}

SubspaceIterator::SubspaceIterator(std::size_t d, uint32_t p, std::size_t k)
    : d_(d), p_(p), patterns_(patterns(d, k)) {
    check_modulus(p);
    if (k > d) throw std::out_of_range("k must satisfy 0 <= k <= d");
    if (!patterns_.empty()) {
        uint64_t c = 1;
        for (std::size_t t = 0; t < free_positions(d_, patterns_[0]).size(); ++t) c *= p_;
        cursor_count_ = c;
    }
}

std::optional<Subspace> SubspaceIterator::next() {
    if (pat_ >= patterns_.size()) return std::nullopt;
    Subspace s = at_cursor(d_, p_, patterns_[pat_], cursor_);
    if (++cursor_ >= cursor_count_) {
        cursor_ = 0;
        ++pat_;
        if (pat_ < patterns_.size()) {
            uint64_t c = 1;
            for (std::size_t t = 0; t < free_positions(d_, patterns_[pat_]).size(); ++t) c *= p_;
            cursor_count_ = c;
        }
    }
    return s;
}

Subspace random_subspace(std::size_t d, uint32_t p, std::size_t k, std::mt19937_64 &rng) {
    auto pats = SubspaceIterator::patterns(d, k);
    std::vector<double> weights;
    for (const auto &pat : pats)
        weights.push_back(std::pow(static_cast<double>(p),
                                   static_cast<double>(SubspaceIterator::free_positions(d, pat).size())));
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const auto &pat = pats[pick(rng)];
    auto free = SubspaceIterator::free_positions(d, pat);
    FpMatrix m(pat.size(), d, p);
    for (std::size_t r = 0; r < pat.size(); ++r) m.at(r, pat[r]) = 1;
    std::uniform_int_distribution<uint32_t> entry(0, p - 1);
    for (auto [r, c] : free) m.at(r, c) = entry(rng);
    return Subspace(m);
}

namespace {

struct ShardResult {
    std::size_t k = 0;
    uint64_t total = 0;
    uint64_t capable = 0;
    std::map<std::size_t, uint64_t> dimY; // dim Y -> count
    std::vector<std::string> violations;
};

std::string describe(const Subspace &X) {
    std::ostringstream os;
    os << "X basis [";
    for (std::size_t i = 0; i < X.dim(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < X.ambient_dim(); ++j) {
            if (j) os << ",";
            os << X.basis().at(i, j);
        }
    }
    os << "]";
    return os.str();
}

void audit_one(const PhiStructure &ps, const Subspace &X, ShardResult &out) {
    CapabilityReport rep = is_capable(ps, X);
    ++out.total;
    if (rep.capable) ++out.capable;
    ++out.dimY[rep.Y.dim()];
    const std::size_t k = X.dim();
    if (k <= 2 && !rep.capable)
        out.violations.push_back("dim<=2 but not capable: " + describe(X));
    if (is_coordinate_subspace(X) && !rep.capable)
        out.violations.push_back("coordinate subspace but not capable: " + describe(X));
    if (rep.capable && !rep.hn_ok)
        out.violations.push_back("capable but fails rank bound: " + describe(X));
    if ((k == 1 || k == 2) && rep.Y.dim() != ps.n() * k)
        out.violations.push_back("dim Y != n*dim X at dim X in {1,2}: " + describe(X));
}

void merge(CensusReport &rep, const ShardResult &s) {
    auto &c = rep.by_dim[s.k];
    c.total += s.total;
    c.capable += s.capable;
    c.non_capable += s.total - s.capable;
    for (auto &[dy, cnt] : s.dimY) rep.dimY_hist[{s.k, dy}] += cnt;
    for (auto &v : s.violations) rep.violations.push_back(v);
}

nlohmann::json shard_to_json(std::size_t shard_id, const ShardResult &s) {
    nlohmann::json j;
    j["shard"] = shard_id;
    j["k"] = s.k;
    j["total"] = s.total;
    j["capable"] = s.capable;
    nlohmann::json dy = nlohmann::json::object();
    for (auto &[d, c] : s.dimY) dy[std::to_string(d)] = c;
    j["dimy"] = dy;
    j["violations"] = s.violations;
    return j;
}

ShardResult shard_from_json(const nlohmann::json &j) {
    ShardResult s;
    s.k = j.at("k").get<std::size_t>();
    s.total = j.at("total").get<uint64_t>();
    s.capable = j.at("capable").get<uint64_t>();
    for (auto &[key, val] : j.at("dimy").items()) s.dimY[std::stoul(key)] = val.get<uint64_t>();
    for (auto &v : j.at("violations")) s.violations.push_back(v.get<std::string>());
    return s;
}

} // namespace

CensusReport census(std::size_t n, uint32_t p, const CensusOptions &opt) {
    PhiStructure ps(n, p);
    const std::size_t dv = ps.dimV();
    const std::size_t lo = opt.dim_lo.value_or(0);
    const std::size_t hi = opt.dim_hi.value_or(dv);
    if (lo > hi || hi > dv) throw std::out_of_range("bad dimension range");

    CensusReport rep;
    rep.n = n;
    rep.p = p;
    rep.dim_lo = lo;
    rep.dim_hi = hi;

    if (opt.sample > 0) {
        rep.sampled = true;
        rep.sample_size = opt.sample;
        std::mt19937_64 rng(opt.seed);
        for (std::size_t k = lo; k <= hi; ++k) {
            ShardResult s;
            s.k = k;
            for (uint64_t t = 0; t < opt.sample; ++t)
                audit_one(ps, random_subspace(dv, p, k, rng), s);
            merge(rep, s);
        }
        return rep;
    }

    uint64_t visits = 0;
    for (std::size_t k = lo; k <= hi; ++k) visits += count_subspaces(dv, p, k);
    if (visits > opt.budget) throw BudgetError(visits);

    // Shard unit: one pivot pattern of one dimension.
    struct Shard {
        std::size_t k;
        std::vector<std::size_t> pattern;
    };
    std::vector<Shard> shards;
    for (std::size_t k = lo; k <= hi; ++k)
        for (auto &pat : SubspaceIterator::patterns(dv, k)) shards.push_back({k, pat});

    std::vector<ShardResult> results(shards.size());
    std::vector<bool> have(shards.size(), false);

    // Resume from a checkpoint written by a previous run with identical options.
    std::mutex ckpt_mutex;
    std::ofstream ckpt_out;
    if (!opt.checkpoint.empty()) {
        std::ifstream in(opt.checkpoint);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line);
            std::size_t id = j.at("shard").get<std::size_t>();
            if (id < shards.size()) {
                results[id] = shard_from_json(j);
                have[id] = true;
            }
        }
        in.close();
        ckpt_out.open(opt.checkpoint, std::ios::app);
    }

    std::atomic<std::size_t> next_shard{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t id = next_shard.fetch_add(1);
            if (id >= shards.size()) break;
            if (have[id]) continue;
            const Shard &sh = shards[id];
            ShardResult s;
            s.k = sh.k;
            auto free = SubspaceIterator::free_positions(dv, sh.pattern);
            uint64_t cells = 1;
            for (std::size_t t = 0; t < free.size(); ++t) cells *= p;
            for (uint64_t cur = 0; cur < cells; ++cur)
                audit_one(ps, SubspaceIterator::at_cursor(dv, p, sh.pattern, cur), s);
            if (ckpt_out.is_open()) {
                std::lock_guard<std::mutex> lk(ckpt_mutex);
                ckpt_out << shard_to_json(id, s).dump() << "\n";
                ckpt_out.flush();
            }
            results[id] = std::move(s);
        }
    };

    std::size_t nw = std::max<std::size_t>(1, opt.workers);
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nw; ++t) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }

    // Merge in shard order: the report is independent of worker count.
    for (std::size_t id = 0; id < shards.size(); ++id) merge(rep, results[id]);
    return rep;
}

std::map<std::size_t, uint64_t> dimY_profile(std::size_t n, uint32_t p, std::size_t k,
                                             uint64_t samples, uint64_t seed) {
    PhiStructure ps(n, p);
    std::map<std::size_t, uint64_t> hist;
    if (samples == 0) {
        SubspaceIterator it(ps.dimV(), p, k);
        while (auto s = it.next()) ++hist[compute_Y(ps, *s).dim()];
    } else {
        std::mt19937_64 rng(seed);
        for (uint64_t t = 0; t < samples; ++t)
            ++hist[compute_Y(ps, random_subspace(ps.dimV(), p, k, rng)).dim()];
    }
    return hist;
}

} // namespace capacheck
