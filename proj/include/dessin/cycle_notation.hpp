#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessin/permutation.hpp"

namespace dessin {

// Grammar: one or more groups "( e1, e2, ..., ek )". Elements are decimal
// integers optionally followed by W/B derivation tags. Commas are optional,
// whitespace is ignored. Syntax errors throw ParseError with a 1-based
// line and column. With a degree, any base index above it is an error.
std::vector<Cycle> parse_cycle_groups(std::string_view text,
                                      std::optional<std::uint32_t> degree = std::nullopt);

// Ground set shared by several parsed inputs: every mentioned label, plus
// each base k in 1..n of which no descendant is mentioned. n is the degree
// when given, otherwise the largest mentioned base index.
GroundPtr infer_ground(const std::vector<std::vector<Cycle>>& inputs,
                       std::optional<std::uint32_t> degree = std::nullopt);

Permutation parse_permutation(std::string_view text,
                              std::optional<std::uint32_t> degree = std::nullopt);

// Canonical text: cycles rotated to their minimum, sorted by minimum, fixed
// points written out. parse_permutation(format_permutation(p)) == p.
std::string format_permutation(const Permutation& p);

}  // namespace dessin
