#pragma once

// Construction pipelines such as
//   ww(product_z2(catalog(z13_H_d3), paley(13, h4)))
//
// Grammar (LL(1)):
//   expr := IDENT [ '(' [ expr { ',' expr } ] ')' ] | NUMBER | STRING
//
// A bare IDENT is a symbol (catalog names, h2/h4); IDENT '(' ... ')' calls a
// function.  STRING is double-quoted without escapes.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dfhad/arrays.hpp"
#include "dfhad/families.hpp"

namespace dfhad {

struct Symbol {
    std::string text;
};

using PipelineValue = std::variant<std::int64_t, Symbol, DifferenceFamily, BuildingFamily, HadamardResult>;

/// Throws ParseError for syntax errors, unknown functions and argument type
/// mismatches; construction errors propagate unchanged.
PipelineValue evaluate_pipeline(std::string_view expr, const ArrayOptions& options = {});

/// One line per function, for --help.
std::string pipeline_help();

}  // namespace dfhad
