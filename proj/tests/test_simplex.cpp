#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "simhom/errors.hpp"
#include "simhom/simplex.hpp"

using namespace simhom;

TEST_CASE("parity counts inversions") {
    CHECK(parity(std::vector<int>{2, 0, 1}) == +1);
    CHECK(inversion_count(std::vector<int>{2, 0, 1}) == 2);
    CHECK(parity(std::vector<int>{0, 1, 2, 3, 4}) == +1);
    CHECK(parity(std::vector<int>{1, 0, 2}) == -1);
    CHECK(parity(std::vector<int>{0}) == +1);
}

TEST_CASE("parity splits the six orderings of a 2-simplex into two classes") {
    const std::vector<std::vector<int>> even = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::vector<int>> odd = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (const auto& f : even) CHECK(parity(f) == +1);
    for (const auto& f : odd) CHECK(parity(f) == -1);
}

TEST_CASE("parity rejects malformed input") {
    CHECK_THROWS_AS(parity(std::vector<int>{0, 2}), MalformedPermutation);
    CHECK_THROWS_AS(parity(std::vector<int>{1, 1, 0}), MalformedPermutation);
    CHECK_THROWS_AS(parity(std::vector<int>{-1, 0}), MalformedPermutation);
}

TEST_CASE("parity is multiplicative under composition") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(1, 8);
        const int n = len(rng);
        std::vector<int> f(n), g(n);
        std::iota(f.begin(), f.end(), 0);
        std::iota(g.begin(), g.end(), 0);
        std::shuffle(f.begin(), f.end(), rng);
        std::shuffle(g.begin(), g.end(), rng);
        std::vector<int> fg(n);
        for (int i = 0; i < n; ++i) fg[i] = f[static_cast<std::size_t>(g[i])];
        CHECK(parity(fg) == parity(f) * parity(g));
    }
}

TEST_CASE("parity agrees with the transposition-count oracle") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> f(n);
        std::iota(f.begin(), f.end(), 0);
        do {
            CHECK(parity(f) == testing::transposition_parity(f));
        } while (std::next_permutation(f.begin(), f.end()));
    }
}

TEST_CASE("canonicalize sorts and records the sorting parity") {
    SECTION("even reordering keeps the sign") {
        auto [s, sign] = canonicalize({1, 2, 0});
        CHECK(s.vertices() == std::vector<VertexId>{0, 1, 2});
        CHECK(sign == +1);
    }
    SECTION("sorted input is its own canonical form") {
        auto [s, sign] = canonicalize({0, 1, 2});
        CHECK(s.vertices() == std::vector<VertexId>{0, 1, 2});
        CHECK(sign == +1);
    }
    SECTION("odd reordering flips the sign") {
        auto [s, sign] = canonicalize({1, 0, 2});
        CHECK(s.vertices() == std::vector<VertexId>{0, 1, 2});
        CHECK(sign == -1);
    }
    SECTION("labels need not be contiguous") {
        auto [s, sign] = canonicalize({9, 4});
        CHECK(s.vertices() == std::vector<VertexId>{4, 9});
        CHECK(sign == -1);
    }
}

TEST_CASE("canonicalize rejects degenerate input") {
    CHECK_THROWS_AS(canonicalize({0, 1, 0}), DuplicateVertex);
    CHECK_THROWS_AS(canonicalize(std::vector<VertexId>{}), Error);
}

TEST_CASE("canonicalize is idempotent and swap-equivariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> len(2, 7);
        const int n = len(rng);
        std::vector<VertexId> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 0);
        std::shuffle(vs.begin(), vs.end(), rng);

        auto [s, sign] = canonicalize(vs);
        auto [s2, sign2] = canonicalize(s.vertices());
        CHECK(s2 == s);
        CHECK(sign2 == +1);

        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        std::swap(vs[i], vs[j]);
        auto [s3, sign3] = canonicalize(vs);
        CHECK(s3 == s);
        CHECK(sign3 == -sign);
    }
}

TEST_CASE("Simplex validates its vertex tuple") {
    CHECK_THROWS_AS(Simplex({1, 0}), Error);
    CHECK_THROWS_AS(Simplex({0, 0}), Error);
    CHECK_THROWS_AS(Simplex({-2, 0}), Error);
    CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), Error);

    const Simplex s({0, 2, 5});
    CHECK(s.dimension() == 2);
    CHECK(s.facet(0) == Simplex({2, 5}));
    CHECK(s.facet(1) == Simplex({0, 5}));
    CHECK(s.facet(2) == Simplex({0, 2}));
}

TEST_CASE("oriented simplices negate by flipping the sign only") {
    const auto s = OrientedSimplex::from_ordering({2, 0});
    CHECK(s.base == Simplex({0, 2}));
    CHECK(s.sign == -1);
    CHECK((-s).sign == +1);
    CHECK((-s).base == s.base);
    CHECK(-(-s) == s);
}
