#include <doctest.h>

#include "capacheck/phi.hpp"
#include "test_util.hpp"

using namespace capacheck;

TEST_CASE("dimensions") {
    CHECK(PhiStructure(4, 3).dimV() == 6);
    CHECK(PhiStructure(4, 3).dimW() == 20);
    CHECK(PhiStructure(3, 3).dimW() == 8);
    CHECK(PhiStructure(2, 3).dimV() == 1);
    CHECK(PhiStructure(2, 3).dimW() == 2);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(PhiStructure(1, 3), ParamError);
    CHECK_THROWS_AS(PhiStructure(4, 2), EvenPrimeError);
    CHECK_THROWS_AS(PhiStructure(4, 15), FieldError);
}

TEST_CASE("pair order and round trip") {
    PhiStructure ps(4, 3);
    CHECK(ps.pair_to_col(2, 1) == 0);
    CHECK(ps.pair_to_col(3, 2) == 3);
    // full order (2,1),(3,1),(4,1),(3,2),(4,2),(4,3)
    std::vector<std::pair<std::size_t, std::size_t>> want{{2, 1}, {3, 1}, {4, 1},
                                                          {3, 2}, {4, 2}, {4, 3}};
    for (std::size_t c = 0; c < ps.dimV(); ++c) {
        CHECK(ps.pairs()[c].j == want[c].first);
        CHECK(ps.pairs()[c].i == want[c].second);
        CHECK(ps.pair_to_col(ps.pairs()[c].j, ps.pairs()[c].i) == c);
    }
    for (std::size_t c = 0; c < ps.dimW(); ++c) {
        auto t = ps.triples()[c];
        CHECK(ps.triple_to_col(t.j, t.i, t.k) == c);
    }
    CHECK_THROWS_AS(ps.pair_to_col(1, 2), ParamError);
    CHECK_THROWS_AS(ps.triple_to_col(2, 1, 0), ParamError);
}

TEST_CASE("phi column shapes follow the defining cases") {
    for (std::size_t n : {2, 3, 4, 5}) {
        for (uint32_t p : {3u, 5u}) {
            PhiStructure ps(n, p);
            for (std::size_t r = 1; r <= n; ++r) {
                const FpMatrix &m = ps.phi(r);
                for (std::size_t c = 0; c < ps.dimV(); ++c) {
                    auto pr = ps.pairs()[c];
                    std::size_t nonzero = 0;
                    for (std::size_t t = 0; t < ps.dimW(); ++t)
                        if (m.at(t, c) != 0) ++nonzero;
                    if (r >= pr.i) {
                        CHECK(nonzero == 1);
                        CHECK(m.at(ps.triple_to_col(pr.j, pr.i, r), c) == 1);
                    } else {
                        CHECK(nonzero == 2);
                        CHECK(m.at(ps.triple_to_col(pr.j, r, pr.i), c) == 1);
                        CHECK(m.at(ps.triple_to_col(pr.i, r, pr.j), c) == p - 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("specific column: phi_1(v_32) = w_312 - w_213") {
    PhiStructure ps(4, 3);
    std::size_t c = ps.pair_to_col(3, 2);
    const FpMatrix &m = ps.phi(1);
    CHECK(m.at(ps.triple_to_col(3, 1, 2), c) == 1);
    CHECK(m.at(ps.triple_to_col(2, 1, 3), c) == 2); // p - 1
}

TEST_CASE("each phi_r is injective") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (uint32_t p : {3u, 5u, 7u}) {
            PhiStructure ps(n, p);
            for (std::size_t r = 1; r <= n; ++r)
                CHECK(rref(ps.phi(r)).rank == ps.dimV());
        }
}

TEST_CASE("zero-coordinate propagation through phi images") {
    // if v has zero (j,i) coordinate for all pairs in S, then phi_r(v) has
    // zero (j,i,i) coordinate for all (j,i) in S
    PhiStructure ps(4, 3);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<uint32_t> e(0, 2);
    for (int t = 0; t < 200; ++t) {
        std::vector<uint32_t> v(ps.dimV());
        for (auto &x : v) x = e(rng);
        std::vector<std::size_t> zeroed;
        for (std::size_t c = 0; c < ps.dimV(); ++c)
            if (v[c] == 0) zeroed.push_back(c);
        for (std::size_t r = 1; r <= 4; ++r) {
            auto img = ps.phi(r).apply(v);
            for (std::size_t c : zeroed) {
                auto pr = ps.pairs()[c];
                CHECK(img[ps.triple_to_col(pr.j, pr.i, pr.i)] == 0);
            }
        }
    }
}
