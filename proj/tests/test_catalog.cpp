#include <algorithm>

#include "doctest.h"
#include "dfhad/catalog.hpp"
#include "dfhad/error.hpp"
#include "oracles.hpp"

using namespace dfhad;

namespace {

std::vector<std::size_t> sorted_sizes(const DifferenceFamily& f) {
    std::vector<std::size_t> s;
    for (const auto& b : f.blocks()) s.push_back(b.size());
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<std::uint64_t> brute_roots(std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t g = 1; g < p; ++g) {
        std::uint64_t x = 1, ord = 0;
        do {
            x = x * g % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1) out.push_back(g);
    }
    return out;
}

}  // namespace

TEST_CASE("every entry verifies against its asserted verdicts") {
    CHECK(catalog_names().size() == 5);
    for (const auto& name : catalog_names()) {
        const auto e = catalog_get(name);
        CHECK(e.name == name);
        CHECK_FALSE(e.description.empty());
        if (!e.is_family()) continue;
        const auto r = check_conditions(e.family());
        for (const auto& a : e.asserted)
            if (a.condition <= Condition::D5) CHECK(r.holds(a.condition) == a.holds);
    }
}

TEST_CASE("z5_H") {
    const auto f = catalog_get("z5_H").family();
    CHECK(f.group().factors() == std::vector<int>{5});
    CHECK(f.lambda() == 1);
    CHECK(f.symmetric());
    CHECK(oracle::brute_lambda(f.group(), f.blocks()) == 1);
}

TEST_CASE("z13_H_d3") {
    const auto f = catalog_get("z13_H_d3").family();
    CHECK(f.lambda() == 7);
    CHECK(f.has_kind(Kind::H));
    CHECK_FALSE(f.symmetric());
    CHECK(sorted_sizes(f) == std::vector<std::size_t>{4, 4, 6, 6});
    const auto s = pair_sum(f.block(0), f.block(2)) + pair_sum(f.block(1), f.block(3));
    CHECK(s == GroupRingElement::all(f.group(), 8));
}

TEST_CASE("z37_H_d3 records its primitive-root scan") {
    const auto e = catalog_get("z37_H_d3");
    CHECK(e.family().has_kind(Kind::H));
    CHECK(e.family().lambda() == 25);
    CHECK(check_conditions(e.family()).holds(Condition::D3));
    CHECK(e.metadata.at("omega") == "2");
    CHECK(e.metadata.at("validating_roots") == "2,15,20");
    CHECK(primitive_roots_mod(37) == brute_roots(37));
    CHECK(primitive_roots_mod(13) == brute_roots(13));
}

TEST_CASE("f9_H_spread") {
    const auto e = catalog_get("f9_H_spread");
    const auto& f = e.family();
    CHECK(f.lambda() == 3);
    CHECK(f.group().factors() == std::vector<int>{3, 3});
    CHECK(e.metadata.at("zero_in_all") == "true");
    // each block is a line L through 0 with L L = 3 L
    for (const auto& b : f.blocks()) CHECK(b.ring() * b.ring() == 3 * b.ring());
    GroupRingElement sum(f.group());
    for (const auto& b : f.blocks()) sum += b.ring();
    CHECK(sum == GroupRingElement::all(f.group()) + GroupRingElement::identity(f.group(), 3));
}

TEST_CASE("z9_building") {
    const auto b = catalog_get("z9_building").building();
    for (std::size_t i = 4; i < 8; ++i) CHECK(b.part(i).empty());
    CHECK(check_building(b).all_hold());
}

TEST_CASE("unknown names") {
    const auto e = oracle::error_of([] { catalog_get("z7_H"); });
    REQUIRE(e);
    CHECK(e->code() == ErrorCode::UnknownName);
}

TEST_CASE("prime scan") {
    const auto s = prime_scan(300);
    CHECK(s.two == std::vector<std::uint64_t>{1, 3, 21, 45, 63, 81, 105, 153, 177, 201, 219, 225, 249, 279, 297});
    CHECK(s.eighteen == std::vector<std::uint64_t>{1,   3,   5,   31,  45,  55,  57,  71,  79,  89,  107, 109, 119,
                                                   123, 137, 141, 159, 167, 173, 181, 197, 217, 255, 275, 285, 295});
    const auto t = prime_scan(1000);
    CHECK(t.two.size() == 32);
    CHECK(t.eighteen.size() == 74);
    CHECK(prime_scan(0).two.empty());
    CHECK(prime_scan(2).two == std::vector<std::uint64_t>{1});
    const auto e = oracle::error_of([] { prime_scan(kPrimeScanMaxBound + 1); });
    REQUIRE(e);
    CHECK(e->code() == ErrorCode::BoundTooLarge);
}
