#pragma once

// Difference families, building families and every named condition on
// them.  All verdicts come from exact group-ring evaluation except the
// character condition (ii), which uses floating point with a tolerance.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dfhad/group.hpp"

namespace dfhad {

enum class Kind { H, H2star, H4star, H8star };

std::string_view to_string(Kind k) noexcept;
std::optional<Kind> parse_kind(std::string_view s) noexcept;

struct DfVerdict {
    std::int64_t lambda = 0;
    std::vector<Kind> kinds;  // every kind whose defining equation holds
};

/// lambda from sum B_i B_i^(-1) = lambda G + (sum k_i - lambda) 0_G, plus the
/// satisfied kinds.  Throws NotADifferenceFamily with the deviating element.
DfVerdict verify_df(const GroupSpec& group, const std::vector<Subset>& blocks);

class DifferenceFamily {
public:
    /// Verifies on construction; throws NotADifferenceFamily.
    DifferenceFamily(GroupSpec group, std::vector<Subset> blocks);

    const GroupSpec& group() const noexcept { return group_; }
    const std::vector<Subset>& blocks() const noexcept { return blocks_; }
    const Subset& block(std::size_t i) const { return blocks_.at(i); }
    std::size_t size() const noexcept { return blocks_.size(); }
    std::int64_t lambda() const noexcept { return verdict_.lambda; }
    const std::vector<Kind>& kinds() const noexcept { return verdict_.kinds; }
    bool has_kind(Kind k) const noexcept;
    bool symmetric() const;
    std::size_t total_block_size() const;

    friend bool operator==(const DifferenceFamily& a, const DifferenceFamily& b) {
        return a.group_ == b.group_ && a.blocks_ == b.blocks_;
    }

private:
    GroupSpec group_;
    std::vector<Subset> blocks_;
    DfVerdict verdict_;
};

enum class Condition { C1, C2, C3, C4, C5, D1, D2, D3, D4, D5, A1, A2, A3, A4, I, II, III };

std::string_view to_string(Condition c) noexcept;
std::optional<Condition> parse_condition(std::string_view s) noexcept;
inline constexpr std::array<Condition, 10> kFamilyConditions = {
    Condition::C1, Condition::C2, Condition::C3, Condition::C4, Condition::C5,
    Condition::D1, Condition::D2, Condition::D3, Condition::D4, Condition::D5};

enum class Status { Holds, Fails, NotApplicable };
std::string_view to_string(Status s) noexcept;

struct Verdict {
    Status status = Status::NotApplicable;
    std::optional<std::size_t> witness;  // element index, or character index for (ii)
    std::string note;

    bool holds() const noexcept { return status == Status::Holds; }
};

struct ConditionReport {
    std::map<Condition, Verdict> verdicts;

    bool holds(Condition c) const;
    const Verdict& at(Condition c) const { return verdicts.at(c); }
    bool all_hold() const;
};

/// Four-block conditions (c1)-(c5), (d1)-(d5).  Conditions outside that set
/// get NotApplicable.  Throws WrongBlockCount unless the family has 4 blocks.
ConditionReport check_conditions(const DifferenceFamily& family, std::span<const Condition> which = kFamilyConditions);

/// D_a D_b^(-1) + D_b D_a^(-1)
GroupRingElement pair_sum(const Subset& a, const Subset& b);

struct EPair {
    Subset e0, e1;
    Subset e0_bar, e1_bar;  // G* \ E_i
};

/// E_0, E_1 read off X_0 = D0+D1-D2-D3 and X_1 = D0+D3-D1-D2.  Throws
/// CoefficientOutOfRange (witness = offending element) unless both are 0 at
/// 0_G and +-1 elsewhere.
EPair extract_E(const DifferenceFamily& family);

struct DerivedQuantities {
    GroupRingElement W, X0, X1;
    GroupRingElement T0, T1, T2, T3;
    std::optional<GroupRingElement> U;
};

class BuildingFamily {
public:
    /// Throws PreconditionFailed("symmetry") if a part is not symmetric.
    BuildingFamily(GroupSpec group, std::array<Subset, 8> parts);

    const GroupSpec& group() const noexcept { return group_; }
    const std::array<Subset, 8>& parts() const noexcept { return parts_; }
    const Subset& part(std::size_t i) const { return parts_.at(i); }

    friend bool operator==(const BuildingFamily& a, const BuildingFamily& b) {
        return a.group_ == b.group_ && a.parts_ == b.parts_;
    }

private:
    GroupSpec group_;
    std::array<Subset, 8> parts_;
};

/// W, X_0, X_1, T_0..T_3.  Requires a symmetric four-block family
/// satisfying (d2); throws PreconditionFailed naming what is missing.
DerivedQuantities derived_quantities(const DifferenceFamily& family);
/// Quantities of the associated four-block family plus U.
DerivedQuantities derived_quantities(const BuildingFamily& building);

/// (a1) disjoint, (a2) union is G*, (a3) four unions form an H4* family,
/// (a4) the eight-part group-ring identity.
ConditionReport check_building(const BuildingFamily& b);

struct CharacterValue {
    std::size_t character;
    std::size_t block;
    std::complex<double> value;
};

struct SpreadReport {
    Verdict i, ii, iii;
    std::array<Subset, 8> H;
    bool zero_in_all = false;
    bool zero_in_none = false;
    std::vector<CharacterValue> nonzero_values;  // one per nontrivial character when (ii) holds
    double tolerance = 0.0;

    bool all_hold() const noexcept { return i.holds() && ii.holds() && iii.holds(); }
};

/// Tolerance for (ii): 1e-6 * |G|.
SpreadReport check_spread(const DifferenceFamily& family);

}  // namespace dfhad
