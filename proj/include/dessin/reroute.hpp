#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "dessin/pair.hpp"

namespace dessin {

struct RerouteResult {
  PermutationPair pair;
  ElementLabel a_white;
  ElementLabel a_black;
  ElementLabel a;
  ElementLabel b;
};

// E' = {aW, aB} + E \ {a}. white' is white with a renamed aW and aB inserted
// immediately before b in b's cycle; black' is black with a renamed aB plus
// the fixed point aW.
RerouteResult reroute(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);

// Reroute relative to (a, b), then reroute the result relative to (b, aW).
PermutationPair double_reroute(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);

// (t * white * t, black) with t = (a b).
PermutationPair conjugate_by_transposition(const PermutationPair& pair, const ElementLabel& a,
                                           const ElementLabel& b);

// Roles of the three distinguished elements a, white(a), b.
enum class Role { A, WA, B };

// How a table row locates white(b) relative to the product orbits.
enum class RowTest {
  Equals,      // white(b) == x
  SameOrbit,   // white(b) in the product orbit of x
  InArc,       // white(b) on the product arc from x to y
  OffArc,      // white(b) in the orbit of x but not on the arc from x to y
  Elsewhere,   // white(b) in none of the orbits of a, white(a), b
};

struct BranchRow {
  TypeClass source;
  std::string_view id;
  RowTest test;
  Role x;
  Role y;
  TypeClass predicted;
  std::string_view rule;
};

// Every row, grouped by source type, degenerate rows (white(b) = b, a) first.
std::span<const BranchRow> branch_table();

bool branch_row_matches(const PermutationPair& pair, std::uint32_t a, std::uint32_t b, const BranchRow& row);

struct BranchPrediction {
  TypeClass predicted;
  std::size_t row;  // index into branch_table()
};

// Type of reroute(pair, a, b).pair relative to (b, aW), read off the tables
// without performing the reroute.
BranchPrediction predict_branch(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);
BranchPrediction predict_branch_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b);
TypeClass predict_branch_type(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b);

}  // namespace dessin
