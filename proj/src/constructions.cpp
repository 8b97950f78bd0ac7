#include "dfhad/constructions.hpp"

#include <algorithm>
#include <string>

#include "dfhad/error.hpp"
#include "dfhad/numtheory.hpp"

namespace dfhad {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::PreconditionFailed, what);
}

bool condition_holds(const DifferenceFamily& f, Condition c) {
    const std::array<Condition, 1> one{c};
    return check_conditions(f, one).holds(c);
}

void require_conditions(const DifferenceFamily& f, std::initializer_list<Condition> conds) {
    for (auto c : conds) require(condition_holds(f, c), std::string(to_string(c)));
}

void require_kind(const DifferenceFamily& f, Kind k) {
    require(f.has_kind(k), "kind " + std::string(to_string(k)));
}

DifferenceFamily post_verify(const GroupSpec& g, std::vector<Subset> blocks, Kind kind, const char* what) {
    try {
        DifferenceFamily out(g, std::move(blocks));
        if (!out.has_kind(kind))
            throw Error(ErrorCode::PostVerifyFailed, std::string(what) + ": output is not of type " +
                                                         std::string(to_string(kind)));
        return out;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::PostVerifyFailed) throw;
        throw Error(ErrorCode::PostVerifyFailed, std::string(what) + ": " + e.detail(), e.witness());
    }
}

void post_check(bool ok, const char* what, const std::string& detail) {
    if (!ok) throw Error(ErrorCode::PostVerifyFailed, std::string(what) + ": " + detail);
}

Subset full(const Subset& s) { return complement(s, ComplementMode::Full); }

Subset points(const GroupSpec& g, std::initializer_list<ElementIndex> xs) { return Subset(g, std::vector(xs)); }

std::pair<std::uint64_t, int> require_q1mod4(std::uint64_t q) {
    const auto pp = prime_power(q);
    if (!pp) throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not a prime power");
    if (q % 4 != 1) throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not 1 mod 4");
    return *pp;
}

Subset class_union(const FieldSpec& f, std::uint64_t n, const std::vector<std::uint64_t>& classes,
                   const char* what) {
    std::vector<Subset> pieces;
    for (auto c : classes) pieces.push_back(cyclotomic_class(f, n, c));
    return disjoint_union(pieces, what);
}

}  // namespace

CyclotomicFamily cyclotomic_type_h(std::uint64_t q) {
    const auto [p, e] = require_q1mod4(q);
    const std::uint64_t m = (q - 1) / 4;
    const std::uint64_t n = 8 * m + 4;
    auto f = make_field(p, 2 * e);
    const auto g = additive_group(f);

    std::vector<std::uint64_t> base;
    for (std::uint64_t l = 0; l < m; ++l)
        for (std::uint64_t u = 1; u <= 3; ++u) base.push_back((4 * l + (2 * m + 1) * u) % n);
    for (std::uint64_t j = 0; j <= m; ++j) base.push_back((4 * j + n - 2) % n);

    std::vector<Subset> blocks;
    for (std::uint64_t i = 0; i < 4; ++i) {
        std::vector<std::uint64_t> shifted;
        for (auto c : base) shifted.push_back((c + (2 * m + 1) * i) % n);
        blocks.push_back(class_union(f, n, shifted, "cyclotomic block"));
    }
    auto family = post_verify(g, std::move(blocks), Kind::H, "cyclotomic_type_h");
    post_check(family.symmetric(), "cyclotomic_type_h", "blocks not symmetric");

    EPair ep{class_union(f, 4, {2, (2 * m + 3) % 4}, "E0"), class_union(f, 4, {2, (2 * m + 1) % 4}, "E1"),
             Subset(g), Subset(g)};
    ep.e0_bar = complement(ep.e0, ComplementMode::Star);
    ep.e1_bar = complement(ep.e1, ComplementMode::Star);
    return {std::move(f), std::move(family), std::move(ep)};
}

Subset paley_set(const FieldSpec& f) { return cyclotomic_class(f, 2, 0); }

DifferenceFamily paley_families(std::uint64_t q, Kind kind) {
    const auto [p, e] = require_q1mod4(q);
    const auto f = make_field(p, e);
    const auto g = additive_group(f);
    const auto P = paley_set(f);
    switch (kind) {
        case Kind::H4star: {
            const auto p0 = unite(P, points(g, {0}));
            return post_verify(g, {P, p0, p0, full(P)}, kind, "paley_families");
        }
        case Kind::H2star:
            return post_verify(g, {P, complement(P, ComplementMode::Star)}, kind, "paley_families");
        default: throw Error(ErrorCode::BadParameter, "Paley families exist for H2star and H4star only");
    }
}

DifferenceFamily product_z2(const DifferenceFamily& d, const DifferenceFamily& s) {
    require(d.group() == s.group(), "group mismatch");
    require_kind(d, Kind::H);
    require_conditions(d, {Condition::D3});
    require_kind(s, Kind::H4star);
    require_conditions(s, {Condition::C1});

    const auto z2 = make_group({2});
    const auto g = GroupSpec::product(d.group(), z2);
    const auto at = [&](const Subset& x, ElementIndex t) { return cross(x, points(z2, {t}), g); };
    const auto piece = [&](const Subset& a, const Subset& b) {
        const std::array<Subset, 2> parts{at(a, 0), at(b, 1)};
        return disjoint_union(parts, "product_z2 block");
    };
    return post_verify(g,
                       {piece(d.block(0), full(d.block(2))), piece(d.block(1), full(d.block(3))),
                        piece(s.block(0), s.block(2)), piece(s.block(1), s.block(3))},
                       Kind::H4star, "product_z2");
}

DifferenceFamily product_z3(const DifferenceFamily& d, const DifferenceFamily& s) {
    require(d.group() == s.group(), "group mismatch");
    require(d.symmetric(), "symmetry");
    require_kind(d, Kind::H);
    require_conditions(d, {Condition::D3});
    require_kind(s, Kind::H2star);

    const auto z3 = make_group({3});
    const auto g = GroupSpec::product(d.group(), z3);
    const auto block = [&](const Subset& at1, const Subset& at2, const Subset& at0) {
        const std::array<Subset, 3> parts{cross(at1, points(z3, {1}), g), cross(at2, points(z3, {2}), g),
                                          cross(at0, points(z3, {0}), g)};
        return disjoint_union(parts, "product_z3 block");
    };
    const auto& D = d.blocks();
    auto out = post_verify(g,
                           {block(D[0], full(D[2]), s.block(0)), block(D[3], full(D[1]), s.block(1)),
                            block(full(D[0]), D[2], s.block(0)), block(full(D[3]), D[1], s.block(1))},
                           Kind::H4star, "product_z3");
    const auto expected = 2 * static_cast<std::int64_t>(s.total_block_size()) +
                          static_cast<std::int64_t>(d.group().order()) - 1;
    post_check(out.lambda() == expected, "product_z3", "lambda " + std::to_string(out.lambda()) + ", expected " +
                                                           std::to_string(expected));
    return out;
}

DifferenceFamily product_z5(const DifferenceFamily& d) {
    require(d.symmetric(), "symmetry");
    require_kind(d, Kind::H);
    require_conditions(d, {Condition::D2, Condition::D5});
    const auto e = extract_E(d);

    const auto z5 = make_group({5});
    const auto g = GroupSpec::product(d.group(), z5);
    const auto idx = [&](std::size_t i) { return points(z5, {kZ5Index[i][0], kZ5Index[i][1]}); };
    const auto block = [&](const Subset& a, std::size_t ia, const Subset& b, std::size_t ib, const Subset& zero) {
        const std::array<Subset, 3> parts{cross(a, idx(ia), g), cross(b, idx(ib), g),
                                          cross(zero, points(z5, {0}), g)};
        return disjoint_union(parts, "product_z5 block");
    };
    const auto& D = d.blocks();
    auto out = post_verify(g,
                           {block(D[0], 0, full(D[2]), 1, e.e0_bar), block(D[3], 0, full(D[1]), 1, e.e1_bar),
                            block(full(D[0]), 2, D[2], 3, e.e0), block(full(D[3]), 2, D[1], 3, e.e1)},
                           Kind::H4star, "product_z5");
    const auto v = static_cast<std::int64_t>(d.group().order());
    post_check(out.lambda() == 5 * v - 3, "product_z5",
               "lambda " + std::to_string(out.lambda()) + ", expected " + std::to_string(5 * v - 3));
    return out;
}

namespace {

// Row j lists, for the D-pieces D0, D1, D2c, D3c, D0c, D1c, D2, D3 in that
// order, the index of the building part they are crossed with.
constexpr std::array<std::array<int, 8>, 8> kH8Parts = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 4, 3, 6, 5, 0, 7, 2},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 6, 1, 4, 7, 2, 5, 0},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 0, 7, 2, 1, 4, 3, 6},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 2, 5, 0, 3, 6, 1, 4},
}};

}  // namespace

DifferenceFamily product_h8(const DifferenceFamily& d, const BuildingFamily& b) {
    require(d.symmetric(), "symmetry");
    require_kind(d, Kind::H);
    require_conditions(d, {Condition::D2});
    require(check_building(b).all_hold(), "building family (a1)-(a4)");
    const auto e = extract_E(d);

    const auto& D = d.blocks();
    const std::array<Subset, 8> dpieces{D[0], D[1], full(D[2]), full(D[3]), full(D[0]), full(D[1]), D[2], D[3]};
    const std::array<const Subset*, 8> epieces{&e.e0_bar, &e.e1_bar, &e.e0_bar, &e.e1_bar,
                                               &e.e0,     &e.e1,     &e.e0,     &e.e1};
    const auto g = GroupSpec::product(d.group(), b.group());
    const auto zero = points(b.group(), {0});

    std::vector<Subset> blocks;
    for (std::size_t j = 0; j < 8; ++j) {
        std::vector<Subset> parts;
        for (std::size_t k = 0; k < 8; ++k)
            parts.push_back(cross(dpieces[k], b.part(static_cast<std::size_t>(kH8Parts[j][k])), g));
        parts.push_back(cross(*epieces[j], zero, g));
        blocks.push_back(disjoint_union(parts, "product_h8 block"));
    }
    auto out = post_verify(g, std::move(blocks), Kind::H8star, "product_h8");
    post_check(out.symmetric(), "product_h8", "blocks not symmetric");

    const auto uv = static_cast<std::int64_t>(g.order());
    GroupRingElement sq(g);
    for (const auto& c : out.blocks()) sq += c.ring() * c.ring();
    post_check(sq == GroupRingElement::identity(g, 4 * (uv - 1)) + GroupRingElement::star(g, 2 * (uv - 3)),
               "product_h8", "sum of squares differs from 4(uv-1)0 + 2(uv-3)G*");
    return out;
}

DifferenceFamily building_to_family(const BuildingFamily& b) {
    require(check_building(b).all_hold(), "building family (a1)-(a4)");
    std::vector<Subset> blocks;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Subset> parts{b.part(i + 4)};
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) parts.push_back(b.part(j));
        blocks.push_back(disjoint_union(parts, "bridge block"));
    }
    auto out = post_verify(b.group(), std::move(blocks), Kind::H, "building_to_family");
    post_check(out.symmetric() && condition_holds(out, Condition::D1) && condition_holds(out, Condition::D2),
               "building_to_family", "output misses symmetry, (d1) or (d2)");
    return out;
}

BuildingFamily family_to_building(const DifferenceFamily& d) {
    require(d.symmetric(), "symmetry");
    require_kind(d, Kind::H);
    require_conditions(d, {Condition::D1, Condition::D2});
    const auto& g = d.group();
    std::array<std::vector<ElementIndex>, 8> parts;
    for (ElementIndex x = 1; x < g.order(); ++x) {
        std::size_t count = 0, missing = 0, only = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (d.block(j).contains(x)) {
                ++count;
                only = j;
            } else {
                missing = j;
            }
        }
        if (count == 3)
            parts[missing].push_back(x);
        else if (count == 1)
            parts[only + 4].push_back(x);
        else
            throw Error(ErrorCode::PreconditionFailed, "d4: element lies in " + std::to_string(count) + " blocks", x);
    }
    std::array<Subset, 8> subsets;
    for (std::size_t i = 0; i < 8; ++i) subsets[i] = Subset(g, std::move(parts[i]));
    BuildingFamily b(g, std::move(subsets));
    post_check(check_building(b).all_hold(), "family_to_building", "parts violate (a1)-(a4)");
    return b;
}

DifferenceFamily blockwise_complement(const DifferenceFamily& d) {
    std::vector<Subset> blocks;
    for (const auto& b : d.blocks()) blocks.push_back(full(b));
    return DifferenceFamily(d.group(), std::move(blocks));
}

DifferenceFamily complement_family(const DifferenceFamily& d) {
    require(d.symmetric(), "symmetry");
    require_kind(d, Kind::H);
    require_conditions(d, {Condition::D2});
    for (const auto& b : d.blocks()) require(b.contains(0), "0_G in every block");
    auto out = blockwise_complement(d);
    post_check(out.has_kind(Kind::H) && condition_holds(out, Condition::D1) && condition_holds(out, Condition::D2),
               "complement_family", "output misses type H, (d1) or (d2)");
    return out;
}

RecursionResult turyn_recursion(const DifferenceFamily& d, const DifferenceFamily& f) {
    for (const auto* fam : {&d, &f}) {
        require(fam->size() == 4 && fam->symmetric(), "symmetry");
        require_kind(*fam, Kind::H);
    }
    for (const auto& b : f.blocks()) require(!b.contains(0), "ZeroInF");
    const auto sd = check_spread(d);
    require(sd.all_hold(), "spread conditions (i)-(iii) on D");
    require(check_spread(f).all_hold(), "spread conditions (i)-(iii) on F");

    const auto g = GroupSpec::product(d.group(), f.group());
    const auto& H = sd.H;
    const auto& F = f.blocks();
    const auto block = [&](std::size_t h1, std::size_t f1, std::size_t h2, std::size_t h3, std::size_t f3,
                           std::size_t h4) {
        const std::array<Subset, 4> parts{cross(H[h1], F[f1], g), cross(H[h2], full(F[f1]), g),
                                          cross(H[h3], F[f3], g), cross(H[h4], full(F[f3]), g)};
        return disjoint_union(parts, "turyn_recursion block");
    };
    auto b = post_verify(g,
                         {block(1, 0, 0, 3, 2, 2), block(1, 1, 0, 2, 3, 3), block(6, 0, 7, 5, 2, 4),
                          block(7, 1, 6, 5, 3, 4)},
                         Kind::H, "turyn_recursion");
    post_check(b.symmetric() && check_spread(b).all_hold(), "turyn_recursion", "output misses (i)-(iii)");
    if (condition_holds(b, Condition::D1)) return {std::move(b), false};
    auto c = blockwise_complement(b);
    post_check(condition_holds(c, Condition::D1), "turyn_recursion", "neither B nor its complement satisfies (d1)");
    return {std::move(c), true};
}

}  // namespace dfhad
