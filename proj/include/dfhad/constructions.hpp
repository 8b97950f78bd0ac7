#pragma once

// Constructive results: cyclotomic and Paley families, the four product
// constructions, the building-family bridge, complementation and the
// Turyn-style recursion.  Every operation checks its preconditions (failing
// with PreconditionFailed and the condition's name) and re-verifies its
// output (PostVerifyFailed is an internal bug, never an expected path).

#include <cstdint>

#include "dfhad/families.hpp"
#include "dfhad/field.hpp"

namespace dfhad {

struct CyclotomicFamily {
    FieldSpec field;  // GF(q^2)
    DifferenceFamily family;
    EPair e;  // from the class formula, not from extract_E
};

/// q = 4m+1 a prime power.  Throws BadParameter.
CyclotomicFamily cyclotomic_type_h(std::uint64_t q);

/// Nonzero squares of f as a subset of the additive group.
Subset paley_set(const FieldSpec& f);

/// H4star: (P, P u {0}, P u {0}, G \ P).  H2star: (P, G* \ P).  q a prime
/// power with q = 1 mod 4.  Throws BadParameter (also for H, H8star).
DifferenceFamily paley_families(std::uint64_t q, Kind kind);

/// I_0..I_3 in Z_5.
inline constexpr std::array<std::array<ElementIndex, 2>, 4> kZ5Index = {{{1, 2}, {3, 4}, {2, 4}, {1, 3}}};

/// D type H with (d3), S type H4star with (c1), same group -> H4star in G x Z_2.
DifferenceFamily product_z2(const DifferenceFamily& d, const DifferenceFamily& s);
/// D symmetric type H with (d3), S type H2star -> H4star in G x Z_3.
DifferenceFamily product_z3(const DifferenceFamily& d, const DifferenceFamily& s);
/// D symmetric type H with (d2), (d5) -> H4star in G x Z_5 with lambda 5|G|-3.
DifferenceFamily product_z5(const DifferenceFamily& d);
/// D symmetric type H with (d2) in G, B building family in G' -> symmetric
/// H8star in G x G'.
DifferenceFamily product_h8(const DifferenceFamily& d, const BuildingFamily& b);

/// D_i = A_{i+4} u (A_0 u A_1 u A_2 u A_3 without A_i).  Requires (a1)-(a4).
DifferenceFamily building_to_family(const BuildingFamily& b);
/// Inverse of building_to_family.  Requires symmetric type H with (d1), (d2).
BuildingFamily family_to_building(const DifferenceFamily& d);

/// Blockwise G \ D_i, without preconditions.
DifferenceFamily blockwise_complement(const DifferenceFamily& d);
/// Blockwise complement of a symmetric type-H family with (d2) and
/// 0_G in every block; the result satisfies (d1), (d2).
DifferenceFamily complement_family(const DifferenceFamily& d);

struct RecursionResult {
    DifferenceFamily family;
    bool complemented;  // true when the blockwise complement was needed for (d1)
};

/// D in G and F in N, both symmetric type H with spread conditions (i)-(iii),
/// and 0_N outside every F_i ("ZeroInF").  Output lives in G x N.
RecursionResult turyn_recursion(const DifferenceFamily& d, const DifferenceFamily& f);

}  // namespace dfhad
