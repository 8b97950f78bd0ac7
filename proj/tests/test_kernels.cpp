#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dfhad/arrays.hpp"
#include "dfhad/kernels.hpp"
#include "oracles.hpp"

using namespace dfhad;

TEST_CASE("serial and parallel convolution agree") {
    std::mt19937 rng(11);
    for (const auto& factors : std::vector<std::vector<int>>{{13}, {3, 3}, {5, 2, 3}, {37}}) {
        const auto g = make_group(factors);
        const auto a = oracle::random_coeffs(g.order(), rng, -100, 100);
        const auto b = oracle::random_coeffs(g.order(), rng, -100, 100);
        std::vector<std::int64_t> s(g.order()), p(g.order());
        REQUIRE(kernels::serial::convolve(g, a, b, s));
        REQUIRE(kernels::parallel::convolve(g, a, b, p));
        CHECK(s == p);
        CHECK(s == oracle::convolve(g, a, b));
    }
    const auto g = make_group({2});
    const std::vector<std::int64_t> big = {INT64_MAX, INT64_MAX};
    std::vector<std::int64_t> out(2);
    CHECK_FALSE(kernels::serial::convolve(g, big, big, out));
    CHECK_FALSE(kernels::parallel::convolve(g, big, big, out));
}

TEST_CASE("orthogonality kernels agree on random and Hadamard matrices") {
    std::mt19937 rng(5);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t n : {1, 2, 63, 64, 65, 130}) {
        const auto m = SignMatrix::from_function(n, [&](std::size_t, std::size_t) { return coin(rng) ? 1 : -1; });
        CHECK(kernels::serial::rows_orthogonal(m.rows()) == kernels::parallel::rows_orthogonal(m.rows()));
        for (std::size_t i = 0; i < n; i += 17)
            for (std::size_t j = 0; j < n; j += 13) {
                std::int64_t d = 0;
                for (std::size_t k = 0; k < n; ++k) d += m.at(i, k) * m.at(j, k);
                CHECK(kernels::row_dot(m.rows(), i, m.rows(), j) == d);
            }
    }
    // Sylvester order 128
    const auto syl = SignMatrix::from_function(128, [](std::size_t i, std::size_t j) {
        return __builtin_popcountll(i & j) % 2 ? -1 : 1;
    });
    CHECK(kernels::serial::rows_orthogonal(syl.rows()));
    CHECK(kernels::parallel::rows_orthogonal(syl.rows()));
}

TEST_CASE("signed Gram sums agree with dense products") {
    std::mt19937 rng(9);
    std::bernoulli_distribution coin(0.5);
    const std::size_t n = 70;
    std::vector<SignMatrix> ms;
    for (int k = 0; k < 4; ++k)
        ms.push_back(SignMatrix::from_function(n, [&](std::size_t, std::size_t) { return coin(rng) ? 1 : -1; }));
    const std::vector<kernels::PackedRows> left = {ms[0].rows(), ms[1].rows()}, right = {ms[2].rows(), ms[3].rows()};
    const std::vector<int> signs = {1, -1};
    const auto s = kernels::serial::signed_gram_sum(left, right, signs);
    const auto p = kernels::parallel::signed_gram_sum(left, right, signs);
    CHECK(s == p);
    const auto a = oracle::multiply(oracle::to_dense(ms[0]), oracle::transpose(oracle::to_dense(ms[2])));
    const auto b = oracle::multiply(oracle::to_dense(ms[1]), oracle::transpose(oracle::to_dense(ms[3])));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) REQUIRE(s[i * n + j] == a[i][j] - b[i][j]);
}

TEST_CASE("character sums agree with the direct exponential formula") {
    const auto g = make_group({3, 4});
    const std::vector<ElementIndex> set = {0, 1, 5, 7, 10};
    const auto s = kernels::serial::character_sums(g, set);
    const auto p = kernels::parallel::character_sums(g, set);
    REQUIRE(s.size() == g.order());
    for (ElementIndex a = 0; a < g.order(); ++a) {
        const auto ra = g.element(a).residues;
        std::complex<double> want = 0;
        for (auto x : set) {
            const auto rx = g.element(x).residues;
            const double phase = 2 * std::numbers::pi * (double(ra[0] * rx[0]) / 3 + double(ra[1] * rx[1]) / 4);
            want += std::polar(1.0, phase);
        }
        CHECK(std::abs(s[a] - want) < 1e-9);
        CHECK(std::abs(p[a] - want) < 1e-9);
    }
}
