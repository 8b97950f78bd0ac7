#pragma once

// Text formats.
//
// Family document (canonical JSON, sorted keys, no whitespace):
//   {"blocks":[[[0]],[[1],[4]],[[0]],[[2],[3]]],"group":[5],"kind":"H"}
// Blocks hold residue vectors.  "kind" is one of H, H2star, H4star, H8star
// or "building" (eight parts); an optional "conditions" object maps
// condition names to asserted verdicts.
//
// Matrix file: the decimal order n on the first line, then n lines of n
// characters from {+,-}, each line newline-terminated.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dfhad/arrays.hpp"
#include "dfhad/families.hpp"

namespace dfhad {

struct FamilyDocument {
    std::variant<DifferenceFamily, BuildingFamily> payload;
    std::optional<std::string> kind;
    std::map<std::string, bool> conditions;
};

std::string to_json(const DifferenceFamily& f, const std::map<std::string, bool>& conditions = {});
std::string to_json(const BuildingFamily& b, const std::map<std::string, bool>& conditions = {});

/// Throws ParseError for malformed text; NotADifferenceFamily or
/// PreconditionFailed when the blocks do not form what they claim.
FamilyDocument parse_family_document(std::string_view text);

std::string matrix_to_text(const SignMatrix& m);
/// Throws ParseError.
SignMatrix matrix_from_text(std::string_view text);

/// Whole-file helpers; throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace dfhad
