#include <random>

#include "doctest.h"
#include "dfhad/arrays.hpp"
#include "dfhad/catalog.hpp"
#include "dfhad/constructions.hpp"
#include "dfhad/error.hpp"
#include "oracles.hpp"

using namespace dfhad;
using oracle::Dense;

namespace {

BorderPattern pattern_of(std::uint64_t mask, std::size_t blocks) {
    BorderPattern p(blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
        const auto s = [&](std::size_t b) -> std::int8_t { return mask >> (3 * i + b) & 1 ? -1 : 1; };
        p[i] = {s(0), s(1), s(2)};
    }
    return p;
}

std::vector<int> row_sums(const DifferenceFamily& f) {
    std::vector<int> r;
    for (const auto& b : f.blocks()) r.push_back(static_cast<int>(f.group().order()) - 2 * static_cast<int>(b.size()));
    return r;
}

Dense gram_of_blocks(const DifferenceFamily& f) {
    const std::size_t v = f.group().order();
    Dense s(v, std::vector<std::int64_t>(v, 0));
    for (const auto& b : f.blocks()) {
        const auto m = oracle::to_dense(develop_sign_matrix(b));
        const auto p = oracle::multiply(m, oracle::transpose(m));
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = 0; j < v; ++j) s[i][j] += p[i][j];
    }
    return s;
}

}  // namespace

TEST_CASE("developed matrices follow the difference rule") {
    const auto g = make_group({3, 3});
    const Subset s(g, {1, 4, 8});
    const auto m = develop_sign_matrix(s);
    for (ElementIndex x = 0; x < g.order(); ++x)
        for (ElementIndex y = 0; y < g.order(); ++y) {
            const auto d = oracle::difference(g, oracle::residues(g, y), oracle::residues(g, x));
            CHECK(m.at(x, y) == (s.contains(g.index_of({d})) ? -1 : 1));
        }
}

TEST_CASE("algebra of developed matrices on random subsets") {
    std::mt19937 rng(2024);
    for (const auto& factors : std::vector<std::vector<int>>{{7}, {3, 3}}) {
        const auto g = make_group(factors);
        const auto R = oracle::reversal(g);
        for (int t = 0; t < 20; ++t) {
            const auto m1 = develop_sign_matrix(oracle::random_subset(g, rng));
            const auto m2 = develop_sign_matrix(oracle::random_subset(g, rng));
            const auto M = oracle::to_dense(m1), N = oracle::to_dense(m2);
            CHECK(oracle::multiply(M, N) == oracle::multiply(N, M));
            const auto MR = oracle::multiply(M, R);
            CHECK(MR == oracle::transpose(MR));
            CHECK(oracle::to_dense(times_permutation(m1, reversal(g))) == MR);
            CHECK(oracle::multiply(oracle::multiply(M, oracle::transpose(R)), oracle::transpose(N)) ==
                  oracle::multiply(oracle::multiply(N, R), oracle::transpose(M)));
            CHECK(m1.transposed().transposed() == m1);
            CHECK(oracle::to_dense(m1.transposed()) == oracle::transpose(M));
        }
    }
}

TEST_CASE("is_hadamard on small matrices") {
    const auto h2 = SignMatrix::from_function(2, [](std::size_t i, std::size_t j) { return i && j ? -1 : 1; });
    CHECK(is_hadamard(h2));
    CHECK_FALSE(is_hadamard(SignMatrix(2)));
    CHECK(is_hadamard(SignMatrix(1)));
    CHECK_FALSE(is_hadamard(SignMatrix(3)));
    auto h = h2;
    h.set(1, 1, 1);
    CHECK_FALSE(is_hadamard(h));
}

TEST_CASE("amicability") {
    const auto b = product_h8(catalog_get("z5_H").family(), catalog_get("z9_building").building());
    std::array<SignMatrix, 8> ms;
    for (std::size_t i = 0; i < 8; ++i) ms[i] = develop_sign_matrix(b.block(i));
    CHECK(amicability_check(ms));
    std::mt19937 rng(4);
    const auto g = b.group();
    ms[0] = develop_sign_matrix(oracle::random_subset(g, rng));
    ms[1] = develop_sign_matrix(oracle::random_subset(g, rng));
    CHECK_FALSE(amicability_check(ms));
    ms[7] = SignMatrix(3);
    const auto e = oracle::error_of([&] { amicability_check(ms); });
    REQUIRE(e);
    CHECK(e->code() == ErrorCode::OrderMismatch);
}

TEST_CASE("templates are Latin") {
    for (const auto* t : {&goethals_seidel_template(), &szekeres_template(), &kharaghani_template()}) {
        CHECK_NOTHROW(t->validate());
        CHECK(frozen_border(*t).size() == (t->size == 4 ? 4u : t->size));
    }
    ArrayTemplate bad = szekeres_template();
    bad.cells[1].block = bad.cells[0].block;
    const auto e = oracle::error_of([&] { bad.validate(); });
    REQUIRE(e);
    CHECK(e->code() == ErrorCode::ArrayRealizationFailed);
}

TEST_CASE("block Gram sums take their parameter form") {
    const auto check = [](const DifferenceFamily& f, std::int64_t l) {
        const auto s = gram_of_blocks(f);
        const auto v = static_cast<std::int64_t>(f.group().order());
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) REQUIRE(s[i][j] == (i == j ? l * (v + 1) : 0) - l);
        CHECK(gram_sum(f) == GroupRingElement::identity(f.group(), l * (v + 1)) - GroupRingElement::all(f.group(), l));
    };
    check(paley_families(13, Kind::H4star), 4);
    check(product_z5(catalog_get("z5_H").family()), 4);
    check(product_h8(catalog_get("z5_H").family(), catalog_get("z9_building").building()), 8);
}

TEST_CASE("scalar border equations decide the bordered array at order 56") {
    const auto f = paley_families(13, Kind::H4star);
    const auto& t = goethals_seidel_template();
    const auto r = row_sums(f);
    int hadamard = 0;
    for (std::uint64_t mask = 0; mask < 4096; ++mask) {
        const auto p = pattern_of(mask, 4);
        const bool h = is_hadamard(assemble(t, f, p));
        REQUIRE(h == border_equations_hold(t, 13, r, p));
        hadamard += h;
    }
    CHECK(hadamard == static_cast<int>(border_candidates(t, 13, r).size()));
    CHECK(hadamard == 40);
    CHECK(border_equations_hold(t, 13, r, frozen_border(t)));
    CHECK(border_search(t, 13, r) == border_candidates(t, 13, r).front());
}

TEST_CASE("scalar border equations decide the Szekeres array at order 28") {
    const auto f = paley_families(13, Kind::H2star);
    const auto& t = szekeres_template();
    const auto r = row_sums(f);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const auto p = pattern_of(mask, 2);
        REQUIRE(is_hadamard(assemble(t, f, p)) == border_equations_hold(t, 13, r, p));
    }
    CHECK(border_candidates(t, 13, r).size() == 8);
}

TEST_CASE("array constructions against the dense oracle") {
    const auto gs = goethals_seidel(catalog_get("z5_H").family());
    CHECK(gs.matrix.order() == 20);
    CHECK(gs.border.empty());
    CHECK(gs.full_check);
    CHECK(oracle::hadamard(oracle::to_dense(gs.matrix)));

    const auto sz = szekeres(paley_families(13, Kind::H2star));
    CHECK(sz.matrix.order() == 28);
    CHECK(oracle::hadamard(oracle::to_dense(sz.matrix)));

    const auto ww = wallis_whiteman(paley_families(13, Kind::H4star));
    CHECK(ww.matrix.order() == 56);
    CHECK(ww.frozen_border);
    CHECK(oracle::hadamard(oracle::to_dense(ww.matrix)));
    CHECK(ww.border == frozen_border(goethals_seidel_template()));
}

TEST_CASE("orders from the product constructions") {
    const auto z5 = catalog_get("z5_H").family();
    const auto z13 = catalog_get("z13_H_d3").family();
    const auto cyc = cyclotomic_type_h(5).family;

    CHECK(goethals_seidel(cyc).matrix.order() == 100);
    const auto w104 = wallis_whiteman(product_z5(z5));
    CHECK(w104.matrix.order() == 104);
    CHECK(is_hadamard(w104.matrix));
    const auto w108 = wallis_whiteman(product_z2(z13, paley_families(13, Kind::H4star)));
    CHECK(w108.matrix.order() == 108);
    CHECK(is_hadamard(w108.matrix));
    CHECK_FALSE(w108.frozen_border);
    const auto w304 = hadamard_from_family(product_z3(cyc, paley_families(25, Kind::H2star)));
    CHECK(w304.scheme == "wallis-whiteman");
    CHECK(w304.matrix.order() == 304);
    CHECK(is_hadamard(w304.matrix));
    const auto k368 = kharaghani(product_h8(z5, catalog_get("z9_building").building()));
    CHECK(k368.matrix.order() == 368);
    CHECK(k368.full_check);
    CHECK(is_hadamard(k368.matrix));
}

TEST_CASE("the block-level check replaces the full check above the threshold") {
    const auto f = product_h8(cyclotomic_type_h(5).family, catalog_get("z9_building").building());
    const auto k = kharaghani(f);
    CHECK(k.matrix.order() == 1808);
    CHECK_FALSE(k.full_check);
    const auto full = kharaghani(f, ArrayOptions{true, 1200});
    CHECK(full.full_check);
    CHECK(full.matrix == k.matrix);
}

TEST_CASE("array gates") {
    const auto z5 = catalog_get("z5_H").family();
    const auto e1 = oracle::error_of([&] { wallis_whiteman(z5); });
    REQUIRE(e1);
    CHECK(e1->code() == ErrorCode::PreconditionFailed);

    // translating one block keeps the family but breaks amicability
    const auto b = product_h8(z5, catalog_get("z9_building").building());
    auto blocks = b.blocks();
    blocks[0] = translate(blocks[0], 1);
    const DifferenceFamily moved(b.group(), blocks);
    REQUIRE(moved.has_kind(Kind::H8star));
    const auto e2 = oracle::error_of([&] { kharaghani(moved); });
    REQUIRE(e2);
    CHECK(e2->code() == ErrorCode::PreconditionFailed);
    CHECK(e2->detail() == "amicability");
}
