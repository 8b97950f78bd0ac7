// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "dfhad/arrays.hpp"
#include "dfhad/catalog.hpp"
#include "dfhad/constructions.hpp"
#include "dfhad/kernels.hpp"

using namespace dfhad;

namespace {

std::vector<std::int64_t> random_coeffs(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<std::int64_t> c(n);
    for (auto& x : c) x = d(rng);
    return c;
}

template <bool Parallel>
void bm_convolve(benchmark::State& state) {
    const auto g = make_group({static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    const auto a = random_coeffs(g.order(), 1), b = random_coeffs(g.order(), 2);
    std::vector<std::int64_t> out(g.order());
    for (auto _ : state) {
        const bool ok = Parallel ? kernels::parallel::convolve(g, a, b, out) : kernels::serial::convolve(g, a, b, out);
        benchmark::DoNotOptimize(ok);
        benchmark::DoNotOptimize(out.data());
    }
}

const SignMatrix& h1808() {
    static const SignMatrix m =
        kharaghani(product_h8(cyclotomic_type_h(5).family, catalog_get("z9_building").building())).matrix;
    return m;
}

template <bool Parallel>
void bm_rows_orthogonal(benchmark::State& state) {
    const auto& m = h1808();
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? kernels::parallel::rows_orthogonal(m.rows())
                                          : kernels::serial::rows_orthogonal(m.rows()));
}

template <bool Parallel>
void bm_signed_gram(benchmark::State& state) {
    const auto f = product_h8(catalog_get("z5_H").family(), catalog_get("z9_building").building());
    std::vector<SignMatrix> ms;
    for (const auto& b : f.blocks()) ms.push_back(develop_sign_matrix(b));
    std::vector<kernels::PackedRows> left, right;
    for (std::size_t i = 0; i < 8; i += 2) {
        left.push_back(ms[i].rows());
        right.push_back(ms[i + 1].rows());
    }
    const std::vector<int> signs = {1, 1, 1, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? kernels::parallel::signed_gram_sum(left, right, signs)
                                          : kernels::serial::signed_gram_sum(left, right, signs));
}

template <bool Parallel>
void bm_character_sums(benchmark::State& state) {
    const auto f = cyclotomic_type_h(13).family;
    const auto& set = f.block(0).members();
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? kernels::parallel::character_sums(f.group(), set)
                                          : kernels::serial::character_sums(f.group(), set));
}

}  // namespace

BENCHMARK(bm_convolve<false>)->Arg(13)->Arg(25)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_convolve<true>)->Arg(13)->Arg(25)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_rows_orthogonal<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rows_orthogonal<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_signed_gram<false>)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_signed_gram<true>)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_character_sums<false>)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_character_sums<true>)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
