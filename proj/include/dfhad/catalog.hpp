#pragma once

// Named, source-embedded example families.  Every entry is rebuilt and
// re-verified from its raw index lists on each lookup.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dfhad/families.hpp"

namespace dfhad {

struct ExpectedVerdict {
    Condition condition;
    bool holds;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::variant<DifferenceFamily, BuildingFamily> payload;
    std::vector<ExpectedVerdict> asserted;
    std::map<std::string, std::string> metadata;

    bool is_family() const noexcept { return std::holds_alternative<DifferenceFamily>(payload); }
    const DifferenceFamily& family() const { return std::get<DifferenceFamily>(payload); }
    const BuildingFamily& building() const { return std::get<BuildingFamily>(payload); }
};

/// Throws UnknownName; Z37ScanFailed or PostVerifyFailed signal corrupted data.
CatalogEntry catalog_get(const std::string& name);
const std::vector<std::string>& catalog_names();

/// Primitive roots mod a prime p, increasing.
std::vector<std::uint64_t> primitive_roots_mod(std::uint64_t p);

struct PrimeScan {
    std::vector<std::uint64_t> two;       // odd n < bound, 2n^4+1 prime
    std::vector<std::uint64_t> eighteen;  // odd n < bound, 18n^4+1 prime
};

/// 18n^4+1 stays below the deterministic Miller-Rabin limit for n below this.
inline constexpr std::uint64_t kPrimeScanMaxBound = 655000;

/// Throws BoundTooLarge above kPrimeScanMaxBound.
PrimeScan prime_scan(std::uint64_t bound);

}  // namespace dfhad
