#include "dfhad/catalog.hpp"

#include <algorithm>
#include <string>

#include "dfhad/error.hpp"
#include "dfhad/numtheory.hpp"

namespace dfhad {

namespace {

using Lists = std::vector<std::vector<ElementIndex>>;

std::vector<Subset> subsets(const GroupSpec& g, const Lists& lists) {
    std::vector<Subset> out;
    for (const auto& l : lists) out.emplace_back(g, l);
    return out;
}

std::string join(const std::vector<std::uint64_t>& xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

CatalogEntry family_entry(std::string name, std::string description, const GroupSpec& g, const Lists& blocks,
                          std::vector<ExpectedVerdict> asserted) {
    return CatalogEntry{std::move(name), std::move(description), DifferenceFamily(g, subsets(g, blocks)),
                        std::move(asserted), {}};
}

// Z_3 x Z_3, index 3a + b.
const Lists kZ9Parts = {{1, 2}, {3, 6}, {5, 7}, {4, 8}, {}, {}, {}, {}};

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    for (b %= m; e; e >>= 1, b = b * b % m)
        if (e & 1) r = r * b % m;
    return r;
}

struct Z37Set {
    bool with_zero;
    std::vector<unsigned> exponents;
};
const std::array<Z37Set, 4> kZ37Sets = {{
    {true, {0, 3, 7, 8, 10}},
    {false, {0, 1, 7, 8, 10}},
    {true, {0, 1, 5, 7, 9}},
    {false, {1, 3, 4, 5, 7}},
}};

std::vector<Subset> z37_blocks(const GroupSpec& g, std::uint64_t omega) {
    std::vector<Subset> out;
    for (const auto& s : kZ37Sets) {
        std::vector<ElementIndex> m;
        if (s.with_zero) m.push_back(0);
        for (auto i : s.exponents)
            for (unsigned j = 0; j < 3; ++j) m.push_back(powmod(omega, i + 12 * j, 37));
        out.emplace_back(g, std::move(m));
    }
    return out;
}

bool z37_validates(const GroupSpec& g, std::uint64_t omega) {
    try {
        DifferenceFamily f(g, z37_blocks(g, omega));
        const std::array<Condition, 1> d3{Condition::D3};
        return f.has_kind(Kind::H) && check_conditions(f, d3).holds(Condition::D3);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotADifferenceFamily) return false;
        throw;
    }
}

CatalogEntry build(const std::string& name) {
    using C = Condition;
    if (name == "z5_H") {
        return family_entry(name, "symmetric type H family in Z_5 with (d2)", make_group({5}),
                            {{0}, {1, 4}, {0}, {2, 3}},
                            {{C::D1, false}, {C::D2, true}, {C::D3, true}, {C::D4, true}, {C::D5, true}});
    }
    if (name == "z13_H_d3") {
        // Stored as (D0, D2, D1, D3) of the published listing: (d3) pairs
        // blocks 0|2 and 1|3, and only this order satisfies it.
        return family_entry(name, "non-symmetric type H family in Z_13 with (d3)", make_group({13}),
                            {{1, 2, 3, 5, 6, 9}, {0, 2, 5, 6}, {1, 12, 3, 4, 9, 10}, {0, 1, 3, 9}}, {{C::D3, true}});
    }
    if (name == "z37_H_d3") {
        const auto g = make_group({37});
        const auto roots = primitive_roots_mod(37);
        std::vector<std::uint64_t> valid;
        for (auto w : roots)
            if (z37_validates(g, w)) valid.push_back(w);
        if (valid.empty()) throw Error(ErrorCode::Z37ScanFailed, "no primitive root mod 37 validates");
        CatalogEntry e{name, "type H family in Z_37 with (d3) from primitive-root exponent sets",
                       DifferenceFamily(g, z37_blocks(g, valid.front())), {{C::D3, true}}, {}};
        e.metadata["omega"] = std::to_string(valid.front());
        e.metadata["scanned_roots"] = join(roots);
        e.metadata["validating_roots"] = join(valid);
        return e;
    }
    if (name == "z9_building") {
        const auto g = make_group({3, 3});
        std::array<Subset, 8> parts;
        for (std::size_t i = 0; i < 8; ++i) parts[i] = Subset(g, kZ9Parts[i]);
        return CatalogEntry{name, "building family in Z_3 x Z_3 (A_4..A_7 empty)", BuildingFamily(g, parts),
                            {{C::A1, true}, {C::A2, true}, {C::A3, true}, {C::A4, true}}, {}};
    }
    if (name == "f9_H_spread") {
        Lists lines;
        for (std::size_t i = 0; i < 4; ++i) {
            lines.push_back(kZ9Parts[i]);
            lines.back().push_back(0);
        }
        auto e = family_entry(name, "the four lines through 0 in (GF(9),+) = Z_3 x Z_3", make_group({3, 3}), lines,
                              {{C::I, true}, {C::II, true}, {C::III, true}});
        e.metadata["zero_in_all"] = "true";
        return e;
    }
    throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
}

void verify_entry(const CatalogEntry& e) {
    const auto mismatch = [&](Condition c, bool expected) {
        throw Error(ErrorCode::PostVerifyFailed, "catalog entry " + e.name + ": condition " +
                                                     std::string(to_string(c)) + " expected to " +
                                                     (expected ? "hold" : "fail"));
    };
    if (!e.is_family()) {
        const auto rep = check_building(e.building());
        for (const auto& a : e.asserted)
            if (rep.holds(a.condition) != a.holds) mismatch(a.condition, a.holds);
        return;
    }
    const auto& f = e.family();
    std::vector<Condition> four;
    bool spread = false;
    for (const auto& a : e.asserted) {
        if (a.condition == Condition::I || a.condition == Condition::II || a.condition == Condition::III)
            spread = true;
        else
            four.push_back(a.condition);
    }
    const auto rep = check_conditions(f, four);
    std::optional<SpreadReport> sp;
    if (spread) sp = check_spread(f);
    for (const auto& a : e.asserted) {
        bool h;
        switch (a.condition) {
            case Condition::I: h = sp->i.holds(); break;
            case Condition::II: h = sp->ii.holds(); break;
            case Condition::III: h = sp->iii.holds(); break;
            default: h = rep.holds(a.condition); break;
        }
        if (h != a.holds) mismatch(a.condition, a.holds);
    }
}

}  // namespace

std::vector<std::uint64_t> primitive_roots_mod(std::uint64_t p) {
    const auto divisors = prime_divisors(p - 1);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t g = 2; g < p; ++g) {
        if (std::all_of(divisors.begin(), divisors.end(), [&](auto l) { return powmod(g, (p - 1) / l, p) != 1; }))
            roots.push_back(g);
    }
    return roots;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"z5_H", "z13_H_d3", "z37_H_d3", "z9_building", "f9_H_spread"};
    return names;
}

CatalogEntry catalog_get(const std::string& name) {
    auto e = build(name);
    verify_entry(e);
    return e;
}

PrimeScan prime_scan(std::uint64_t bound) {
    if (bound > kPrimeScanMaxBound)
        throw Error(ErrorCode::BoundTooLarge,
                    "bound " + std::to_string(bound) + " exceeds " + std::to_string(kPrimeScanMaxBound));
    PrimeScan out;
    for (std::uint64_t n = 1; n < bound; n += 2) {
        const u128 n4 = static_cast<u128>(n) * n * n * n;
        if (is_prime(2 * n4 + 1)) out.two.push_back(n);
        if (is_prime(18 * n4 + 1)) out.eighteen.push_back(n);
    }
    return out;
}

}  // namespace dfhad
