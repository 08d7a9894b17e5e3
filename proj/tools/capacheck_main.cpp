#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "capacheck/capability.hpp"
#include "capacheck/enumerate.hpp"
#include "capacheck/oracle.hpp"
#include "capacheck/presentation.hpp"

using nlohmann::json;
using namespace capacheck;

namespace {

constexpr const char *kSchema = "capacheck/1";

std::string pair_name(const PairIndex &pr) {
    std::ostringstream os;
    if (pr.j < 10 && pr.i < 10)
        os << "v" << pr.j << pr.i;
    else
        os << "v(" << pr.j << "," << pr.i << ")";
    return os.str();
}

std::string vector_in_v_notation(const std::vector<uint32_t> &v,
                                 const std::vector<PairIndex> &pairs, uint32_t p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        uint32_t coef = v[c];
        bool neg = coef > p / 2; // print small negatives as subtraction
        uint32_t mag = neg ? p - coef : coef;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1) os << mag << "*";
        os << pair_name(pairs[c]);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

json basis_json(const Subspace &s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row(i));
    return rows;
}

json report_json(const CapabilityReport &rep) {
    json j;
    j["schema"] = kSchema;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["dim_X"] = rep.X.dim();
    j["dim_Y"] = rep.Y.dim();
    j["dim_Z"] = rep.Z.dim();
    j["X"] = basis_json(rep.X);
    j["Y"] = basis_json(rep.Y);
    j["Z"] = basis_json(rep.Z);
    j["capable"] = rep.capable;
    j["witnesses"] = rep.witnesses;
    j["central_dim"] = rep.central_dim;
    j["hn_bound_ok"] = rep.hn_ok;
    j["sufficient_hit"] = rep.sufficient_hit;
    return j;
}

void print_report_text(const CapabilityReport &rep, std::ostream &os) {
    std::vector<PairIndex> pairs = pair_order(rep.n);
    os << "n = " << rep.n << ", p = " << rep.p << "\n";
    os << "dim X = " << rep.X.dim() << ", dim Y_X = " << rep.Y.dim()
       << ", dim Z_X = " << rep.Z.dim() << "\n";
    if (rep.capable) {
        os << "X = Z_X. Therefore, G is capable.\n";
    } else {
        os << "X != Z_X. Therefore, G is not capable.\n";
        os << "Witnesses (elements of Z_X not in X, reduced modulo X):\n";
        for (const auto &w : rep.witnesses)
            os << "  " << vector_in_v_notation(w, pairs, rep.p) << "\n";
    }
    os << "dim Z(G)/[G,G] = " << rep.central_dim << "\n";
    os << "rank bound check: " << (rep.hn_ok ? "ok" : "violated (consistent only if non-capable)")
       << "\n";
}

json census_json(const CensusReport &rep) {
    json j;
    j["schema"] = kSchema;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["dims"] = {rep.dim_lo, rep.dim_hi};
    j["sampled"] = rep.sampled;
    if (rep.sampled) j["sample_size"] = rep.sample_size;
    json per = json::array();
    for (auto &[k, c] : rep.by_dim)
        per.push_back({{"k", k}, {"total", c.total}, {"capable", c.capable},
                       {"non_capable", c.non_capable}});
    j["by_dim"] = per;
    json hist = json::array();
    for (auto &[key, cnt] : rep.dimY_hist)
        hist.push_back({{"dim_X", key.first}, {"dim_Y", key.second}, {"count", cnt}});
    j["dimY_histogram"] = hist;
    j["violations"] = rep.violations;
    return j;
}

void print_census_csv(const CensusReport &rep, std::ostream &os) {
    os << "k,verdict,count\n";
    for (auto &[k, c] : rep.by_dim) {
        os << k << ",capable," << c.capable << "\n";
        os << k << ",non_capable," << c.non_capable << "\n";
    }
}

Subspace random_subspace_any_dim(std::size_t d, uint32_t p, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> kd(0, d);
    return random_subspace(d, p, kd(rng), rng);
}

NormalForm random_nf(std::size_t n, uint32_t p, std::mt19937_64 &rng) {
    std::uniform_int_distribution<uint32_t> e(0, p - 1);
    NormalForm nf(n, p);
    for (std::size_t i = 1; i <= n; ++i) nf.mul_generator(i, e(rng));
    std::vector<uint32_t> b(dim_v(n));
    for (auto &x : b) x = e(rng);
    nf = multiply(nf, NormalForm::from_pair_vector(n, p, b));
    for (std::size_t i = 1; i <= n; ++i) nf.mul_generator(i, e(rng));
    return nf;
}

struct SuiteOutcome {
    uint64_t checked = 0;
    uint64_t failed = 0;
    void note(bool ok) {
        ++checked;
        if (!ok) ++failed;
    }
};

bool prop12_identities(std::size_t n, uint32_t p, uint64_t count, std::mt19937_64 &rng,
                       SuiteOutcome &out) {
    std::uniform_int_distribution<int64_t> exps(-6, 6);
    for (uint64_t t = 0; t < count; ++t) {
        NormalForm x = random_nf(n, p, rng), y = random_nf(n, p, rng), z = random_nf(n, p, rng);
        int64_t r = exps(rng), s = exps(rng);
        // (a) [xy,z] = [x,z][x,z,y][y,z]
        NormalForm lhs = commutator(multiply(x, y), z);
        NormalForm rhs = multiply(multiply(commutator(x, z), commutator(commutator(x, z), y)),
                                  commutator(y, z));
        out.note(lhs == rhs);
        // (b) [x,yz] = [x,z][z,[y,x]][x,y]
        lhs = commutator(x, multiply(y, z));
        rhs = multiply(multiply(commutator(x, z), commutator(z, commutator(y, x))),
                       commutator(x, y));
        out.note(lhs == rhs);
        // (c) [x,y,z][y,z,x][z,x,y] = e   (class-3 truncation)
        NormalForm jac = multiply(
            multiply(commutator(commutator(x, y), z), commutator(commutator(y, z), x)),
            commutator(commutator(z, x), y));
        out.note(jac.is_identity());
        // (d) [x^r,y^s] = [x,y]^{rs}[x,y,x]^{s C(r,2)}[x,y,y]^{r C(s,2)}
        NormalForm xy = commutator(x, y);
        lhs = commutator(power(x, r), power(y, s));
        rhs = multiply(multiply(power(xy, r * s), power(commutator(xy, x), s * (r * (r - 1) / 2))),
                       power(commutator(xy, y), r * (s * (s - 1) / 2)));
        out.note(lhs == rhs);
        // (e) [y^r,x^s] = [x,y]^{-rs}[x,y,x]^{-r C(s,2)}[x,y,y]^{-s C(r,2)}
        lhs = commutator(power(y, r), power(x, s));
        rhs = multiply(
            multiply(power(xy, -r * s), power(commutator(xy, x), -r * (s * (s - 1) / 2))),
            power(commutator(xy, y), -s * (r * (r - 1) / 2)));
        out.note(lhs == rhs);
    }
    return out.failed == 0;
}

int run_oracle_selftest() {
    std::mt19937_64 rng(20240901);
    bool all_ok = true;
    std::cout << "  n  p  crosscheck  identities  assoc/inv  YX-agree\n";
    for (std::size_t n = 2; n <= 5; ++n)
        for (uint32_t p : {3u, 5u}) {
            PhiStructure ps(n, p);
            bool cross = phi_crosscheck(ps);

            SuiteOutcome ids;
            prop12_identities(n, p, 40, rng, ids);

            SuiteOutcome grp;
            for (int t = 0; t < 60; ++t) {
                NormalForm a = random_nf(n, p, rng), b = random_nf(n, p, rng),
                           c = random_nf(n, p, rng);
                grp.note(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
                grp.note(multiply(a, inverse(a)).is_identity());
                grp.note(multiply(inverse(a), a).is_identity());
            }

            SuiteOutcome yx;
            if (n <= 4) {
                std::mt19937_64 rng2(7 * n + p);
                for (int t = 0; t < 25; ++t) {
                    Subspace X = random_subspace_any_dim(ps.dimV(), p, rng2);
                    yx.note(group_level_YX(ps, X) == compute_Y(ps, X));
                }
            }

            bool row_ok = cross && ids.failed == 0 && grp.failed == 0 && yx.failed == 0;
            all_ok = all_ok && row_ok;
            auto pf = [](bool ok) { return ok ? "pass" : "FAIL"; };
            std::cout << "  " << n << "  " << p << "  " << pf(cross) << "        "
                      << pf(ids.failed == 0) << "        " << pf(grp.failed == 0) << "       "
                      << (n <= 4 ? pf(yx.failed == 0) : "-") << "\n";
        }
    std::cout << (all_ok ? "oracle selftest: PASS" : "oracle selftest: FAIL") << "\n";
    return all_ok ? 0 : 1;
}

int run_verify(const std::string &suite, std::size_t n, uint32_t p, uint64_t count,
               uint64_t seed) {
    std::mt19937_64 rng(seed);
    SuiteOutcome out;
    if (suite == "coordsub") {
        PhiStructure ps(n, p);
        auto pairs = pair_order(n);
        for (uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
            std::set<std::pair<std::size_t, std::size_t>> S;
            for (std::size_t c = 0; c < pairs.size(); ++c)
                if (mask & (1ull << c)) S.insert({pairs[c].j, pairs[c].i});
            Subspace X = coordinate_subspace(n, p, S);
            out.note(compute_Z(ps, X) == X);
        }
    } else if (suite == "addcyclic") {
        PhiStructure ps(n, p), ps1(n + 1, p);
        for (uint64_t t = 0; t < count; ++t) {
            Subspace X = random_subspace_any_dim(dim_v(n), p, rng);
            bool small_cap = compute_Z(ps, X) == X;
            Subspace Xe = extend_with_central(X, n);
            out.note(small_cap == (compute_Z(ps1, Xe) == Xe));
        }
    } else if (suite == "coprod") {
        std::size_t a = 2, b = n >= 4 ? n - 2 : 2;
        PhiStructure ps(a + b, p);
        for (uint64_t t = 0; t < count; ++t) {
            Subspace Xa = random_subspace_any_dim(dim_v(a), p, rng);
            Subspace Xb = random_subspace_any_dim(dim_v(b), p, rng);
            Subspace X = coproduct(Xa, a, Xb, b);
            out.note(compute_Z(ps, X) == X);
        }
    } else if (suite == "limits") {
        PhiStructure ps(n, p);
        for (std::size_t k : {1, 2}) {
            for (uint64_t t = 0; t < count; ++t) {
                Subspace X = random_subspace(dim_v(n), p, k, rng);
                out.note(compute_Y(ps, X).dim() == n * k);
            }
        }
        if (n > 3) {
            for (std::size_t k = 3; k < n; ++k) {
                auto hist = dimY_profile(n, p, k);
                out.note(hist.size() >= 2);
            }
        }
    } else if (suite == "hn") {
        CensusOptions opt;
        CensusReport rep = census(n, p, opt);
        for (const auto &v : rep.violations)
            if (v.find("rank bound") != std::string::npos) out.note(false);
        out.note(true);
    } else if (suite == "crosscheck") {
        PhiStructure ps(n, p);
        out.note(phi_crosscheck(ps));
        for (uint64_t t = 0; t < count; ++t) {
            Subspace X = random_subspace_any_dim(ps.dimV(), p, rng);
            out.note(group_level_YX(ps, X) == compute_Y(ps, X));
        }
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    std::cout << "suite " << suite << " (n=" << n << ", p=" << p << "): " << out.checked
              << " checks, " << out.failed << " failures -> "
              << (out.failed == 0 ? "pass" : "FAIL") << "\n";
    return out.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"capability checker for class-2 groups of odd prime exponent"};
    app.require_subcommand(1);

    // check
    std::string check_file, check_format = "json";
    auto *check = app.add_subcommand("check", "decide capability of a presented group");
    check->add_option("file", check_file, "presentation or raw-V file")->required();
    check->add_option("--format", check_format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // phi
    std::size_t phi_n = 0;
    uint32_t phi_p = 0;
    auto *phic = app.add_subcommand("phi", "dump the V/W bases and the phi matrices");
    phic->add_option("--n", phi_n, "generator count")->required();
    phic->add_option("--p", phi_p, "odd prime")->required();

    // census
    std::size_t cen_n = 0;
    uint32_t cen_p = 0;
    std::string cen_dims, cen_format = "text", cen_resume;
    uint64_t cen_sample = 0, cen_seed = 0xC0FFEE, cen_budget = 100000000;
    std::size_t cen_workers = 1;
    auto *cen = app.add_subcommand("census", "sweep subspaces of V and audit the theory");
    cen->add_option("--n", cen_n)->required();
    cen->add_option("--p", cen_p)->required();
    cen->add_option("--dims", cen_dims, "dimension range a..b");
    cen->add_option("--sample", cen_sample, "samples per dimension (0 = exhaustive)");
    cen->add_option("--workers", cen_workers, "worker thread count");
    cen->add_option("--budget", cen_budget, "max subspace visits");
    cen->add_option("--resume", cen_resume, "checkpoint file");
    cen->add_option("--seed", cen_seed);
    cen->add_option("--format", cen_format)->check(CLI::IsMember({"json", "csv", "text"}));

    // dimy
    std::size_t dy_n = 0, dy_k = 0;
    uint32_t dy_p = 0;
    uint64_t dy_sample = 0, dy_seed = 0xC0FFEE;
    auto *dy = app.add_subcommand("dimy", "histogram of dim Y_X over Gr(k, V)");
    dy->add_option("--n", dy_n)->required();
    dy->add_option("--p", dy_p)->required();
    dy->add_option("--k", dy_k)->required();
    dy->add_option("--sample", dy_sample);
    dy->add_option("--seed", dy_seed);

    // oracle
    bool selftest = false;
    auto *orc = app.add_subcommand("oracle", "group-level oracle utilities");
    orc->add_flag("--selftest", selftest, "run the identity and crosscheck suite");

    // verify
    std::string suite;
    std::size_t ver_n = 4;
    uint32_t ver_p = 3;
    uint64_t ver_count = 100, ver_seed = 0xC0FFEE;
    auto *ver = app.add_subcommand("verify", "run a named property suite");
    ver->add_option("--suite", suite, "coordsub|addcyclic|coprod|limits|hn|crosscheck")
        ->required();
    ver->add_option("--n", ver_n);
    ver->add_option("--p", ver_p);
    ver->add_option("--count", ver_count);
    ver->add_option("--seed", ver_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (const char *env = std::getenv("CAPACHECK_BUDGET")) cen_budget = std::stoull(env);

    try {
        if (check->parsed()) {
            Presentation pres = parse_presentation_file(check_file);
            PhiStructure ps(pres.n, pres.p);
            CapabilityReport rep = is_capable(ps, to_subspace(pres));
            if (check_format == "json")
                std::cout << report_json(rep).dump(2) << "\n";
            else if (check_format == "csv")
                std::cout << "n,p,dim_X,dim_Y,dim_Z,capable\n"
                          << rep.n << "," << rep.p << "," << rep.X.dim() << "," << rep.Y.dim()
                          << "," << rep.Z.dim() << "," << (rep.capable ? 1 : 0) << "\n";
            else
                print_report_text(rep, std::cout);
            return 0;
        }
        if (phic->parsed()) {
            PhiStructure ps(phi_n, phi_p);
            json j;
            j["schema"] = kSchema;
            j["n"] = ps.n();
            j["p"] = ps.p();
            j["dim_V"] = ps.dimV();
            j["dim_W"] = ps.dimW();
            json pairs = json::array();
            for (auto &pr : ps.pairs()) pairs.push_back({pr.j, pr.i});
            j["pair_order"] = pairs;
            json triples = json::array();
            for (auto &tr : ps.triples()) triples.push_back({tr.j, tr.i, tr.k});
            j["triple_order"] = triples;
            json phis = json::array();
            for (std::size_t r = 1; r <= ps.n(); ++r) {
                json cols = json::array();
                for (std::size_t c = 0; c < ps.dimV(); ++c) {
                    json entries = json::array();
                    for (std::size_t t = 0; t < ps.dimW(); ++t)
                        if (ps.phi(r).at(t, c) != 0) entries.push_back({t, ps.phi(r).at(t, c)});
                    cols.push_back(entries);
                }
                phis.push_back({{"r", r}, {"columns", cols}});
            }
            j["phi"] = phis;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (cen->parsed()) {
            CensusOptions opt;
            opt.sample = cen_sample;
            opt.seed = cen_seed;
            opt.workers = cen_workers;
            opt.budget = cen_budget;
            opt.checkpoint = cen_resume;
            if (!cen_dims.empty()) {
                auto sep = cen_dims.find("..");
                if (sep == std::string::npos) throw ParamError("--dims expects a..b");
                opt.dim_lo = std::stoul(cen_dims.substr(0, sep));
                opt.dim_hi = std::stoul(cen_dims.substr(sep + 2));
            }
            CensusReport rep = census(cen_n, cen_p, opt);
            if (cen_format == "json")
                std::cout << census_json(rep).dump(2) << "\n";
            else if (cen_format == "csv")
                print_census_csv(rep, std::cout);
            else {
                std::cout << "census n=" << rep.n << " p=" << rep.p << (rep.sampled ? " (sampled)" : "")
                          << "\n";
                for (auto &[k, c] : rep.by_dim)
                    std::cout << "  k=" << k << ": total " << c.total << ", capable " << c.capable
                              << ", non-capable " << c.non_capable << "\n";
                std::cout << "  violations: " << rep.violations.size() << "\n";
                for (auto &v : rep.violations) std::cout << "    " << v << "\n";
            }
            return rep.violations.empty() ? 0 : 1;
        }
        if (dy->parsed()) {
            auto hist = dimY_profile(dy_n, dy_p, dy_k, dy_sample);
            json j;
            j["schema"] = kSchema;
            j["n"] = dy_n;
            j["p"] = dy_p;
            j["k"] = dy_k;
            json h = json::object();
            for (auto &[d, c] : hist) h[std::to_string(d)] = c;
            j["dim_Y_histogram"] = h;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (orc->parsed()) {
            if (!selftest) {
                std::cerr << "nothing to do: pass --selftest\n";
                return 2;
            }
            return run_oracle_selftest();
        }
        if (ver->parsed()) return run_verify(suite, ver_n, ver_p, ver_count, ver_seed);
    } catch (const ParseError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
