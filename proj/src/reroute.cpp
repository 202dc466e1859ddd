#include "dessin/reroute.hpp"

#include <array>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

using T = TypeClass;
using R = RowTest;

constexpr std::array<BranchRow, 36> kTable{{
    {T::U, "U/wb=b", R::Equals, Role::B, Role::B, T::P1, "white(b) = b: white'(b) = aB"},
    {T::U, "U/wb=a", R::Equals, Role::A, Role::A, T::P1, "white(b) = a: white'(b) = aW"},
    {T::U, "U(1)", R::SameOrbit, Role::A, Role::A, T::P1, "white(b) in the orbit of a"},
    {T::U, "U(2)", R::SameOrbit, Role::WA, Role::WA, T::N, "white(b) in the orbit of white(a)"},
    {T::U, "U(3)", R::SameOrbit, Role::B, Role::B, T::P1, "white(b) in the orbit of b"},
    {T::U, "U(4)", R::Elsewhere, Role::A, Role::A, T::P3, "white(b) in a fourth orbit"},

    {T::N, "N/wb=b", R::Equals, Role::B, Role::B, T::U, "white(b) = b: white'(b) = aB"},
    {T::N, "N/wb=a", R::Equals, Role::A, Role::A, T::P4, "white(b) = a: white'(b) = aW"},
    {T::N, "N(1)", R::InArc, Role::A, Role::B, T::U, "white(b) on the arc from a to b"},
    {T::N, "N(2)", R::InArc, Role::B, Role::WA, T::P2, "white(b) on the arc from b to white(a) (Tame 1A)"},
    {T::N, "N(3)", R::InArc, Role::WA, Role::A, T::P4, "white(b) on the arc from white(a) to a"},
    {T::N, "N(4)", R::Elsewhere, Role::A, Role::A, T::U, "white(b) in another orbit"},

    {T::P1, "P1/wb=b", R::Equals, Role::B, Role::B, T::N, "white(b) = b: white'(b) = aB"},
    {T::P1, "P1/wb=a", R::Equals, Role::A, Role::A, T::P1, "white(b) = a: white'(b) = aW"},
    {T::P1, "P1(1)", R::InArc, Role::A, Role::WA, T::N, "white(b) on the arc from a to white(a)"},
    {T::P1, "P1(2)", R::InArc, Role::WA, Role::B, T::N, "white(b) on the arc from white(a) to b (Tame 1B)"},
    {T::P1, "P1(3)", R::InArc, Role::B, Role::A, T::P1, "white(b) on the arc from b to a"},
    {T::P1, "P1(4)", R::Elsewhere, Role::A, Role::A, T::P3, "white(b) in another orbit"},

    {T::P2, "P2/wb=b", R::Equals, Role::B, Role::B, T::P2, "white(b) = b: white'(b) = aB"},
    {T::P2, "P2/wb=a", R::Equals, Role::A, Role::A, T::P4, "white(b) = a: white'(b) = aW"},
    {T::P2, "P2(1)", R::InArc, Role::WA, Role::A, T::P4, "white(b) on the arc from white(a) to a"},
    {T::P2, "P2(2)", R::OffArc, Role::WA, Role::A, T::P2, "white(b) in the orbit of a, off the arc from white(a) to a"},
    {T::P2, "P2(3)", R::SameOrbit, Role::B, Role::B, T::P2, "white(b) in the orbit of b (Wild)"},
    {T::P2, "P2(4)", R::Elsewhere, Role::A, Role::A, T::U, "white(b) in a third orbit"},

    {T::P3, "P3/wb=b", R::Equals, Role::B, Role::B, T::P3, "white(b) = b: white'(b) = aB"},
    {T::P3, "P3/wb=a", R::Equals, Role::A, Role::A, T::P1, "white(b) = a: white'(b) = aW"},
    {T::P3, "P3(1)", R::InArc, Role::A, Role::B, T::P3, "white(b) on the arc from a to b"},
    {T::P3, "P3(2)", R::InArc, Role::B, Role::A, T::P1, "white(b) on the arc from b to a"},
    {T::P3, "P3(3)", R::SameOrbit, Role::WA, Role::WA, T::N, "white(b) in the orbit of white(a) (Tame 2)"},
    {T::P3, "P3(4)", R::Elsewhere, Role::A, Role::A, T::P3, "white(b) in a third orbit"},

    {T::P4, "P4/wb=b", R::Equals, Role::B, Role::B, T::P4, "white(b) = b: white'(b) = aB"},
    {T::P4, "P4/wb=a", R::Equals, Role::A, Role::A, T::P4, "white(b) = a: white'(b) = aW"},
    {T::P4, "P4(1)", R::SameOrbit, Role::A, Role::A, T::P4, "white(b) in the orbit of a"},
    {T::P4, "P4(2)", R::InArc, Role::WA, Role::B, T::P4, "white(b) on the arc from white(a) to b"},
    {T::P4, "P4(3)", R::OffArc, Role::WA, Role::B, T::P2, "white(b) in the orbit of b, off the arc from white(a) to b"},
    {T::P4, "P4(4)", R::Elsewhere, Role::A, Role::A, T::U, "white(b) in a third orbit"},
}};

void require_distinct(const ElementLabel& a, const ElementLabel& b) {
  if (a == b) throw DomainError("a and b must be distinct");
}

}  // namespace

RerouteResult reroute(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  require_distinct(a, b);
  const GroundSet& e = pair.ground();
  if (!e.contains(a) || !e.contains(b)) throw DomainError("a and b must belong to the ground set");
  const ElementLabel aw = a.white();
  const ElementLabel ab = a.black();
  if (e.contains(aw) || e.contains(ab)) throw DomainError("derived labels of " + a.to_string() + " already in use");

  std::vector<ElementLabel> labels;
  labels.reserve(e.size() + 1);
  for (const auto& x : e.elements()) {
    if (x != a) labels.push_back(x);
  }
  labels.push_back(aw);
  labels.push_back(ab);
  auto ground = std::make_shared<const GroundSet>(std::move(labels));

  auto rename = [&](const ElementLabel& x, const ElementLabel& to) { return x == a ? to : x; };

  std::vector<Cycle> white;
  for (const auto& c : pair.white().cycles()) {
    Cycle next;
    next.reserve(c.size() + 1);
    for (const auto& x : c) {
      if (x == b) next.push_back(ab);
      next.push_back(rename(x, aw));
    }
    white.push_back(std::move(next));
  }

  std::vector<Cycle> black;
  for (const auto& c : pair.black().cycles()) {
    Cycle next;
    next.reserve(c.size());
    for (const auto& x : c) next.push_back(rename(x, ab));
    black.push_back(std::move(next));
  }
  black.push_back({aw});

  return RerouteResult{
      PermutationPair(Permutation::from_cycles(ground, white), Permutation::from_cycles(ground, black)), aw, ab, a,
      b};
}

PermutationPair double_reroute(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  RerouteResult first = reroute(pair, a, b);
  return reroute(first.pair, b, first.a_white).pair;
}

PermutationPair conjugate_by_transposition(const PermutationPair& pair, const ElementLabel& a,
                                           const ElementLabel& b) {
  require_distinct(a, b);
  Permutation t = transposition(pair.ground_ptr(), a, b);
  return PermutationPair(conjugate(pair.white(), t), pair.black());
}

std::span<const BranchRow> branch_table() { return kTable; }

bool branch_row_matches(const PermutationPair& pair, std::uint32_t a, std::uint32_t b, const BranchRow& row) {
  const Permutation& p = pair.product();
  const std::uint32_t wa = pair.white().at(a);
  const std::uint32_t wb = pair.white().at(b);
  auto at = [&](Role r) { return r == Role::A ? a : r == Role::WA ? wa : b; };
  switch (row.test) {
    case RowTest::Equals:
      return wb == at(row.x);
    case RowTest::SameOrbit:
      return p.same_orbit_at(wb, at(row.x));
    case RowTest::InArc:
      return p.arc_contains_at(at(row.x), at(row.y), wb);
    case RowTest::OffArc:
      return p.same_orbit_at(wb, at(row.x)) && !p.arc_contains_at(at(row.x), at(row.y), wb);
    case RowTest::Elsewhere:
      return !p.same_orbit_at(wb, a) && !p.same_orbit_at(wb, wa) && !p.same_orbit_at(wb, b);
  }
  return false;
}

BranchPrediction predict_branch_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b) {
  const TypeClass source = classify_type_at(pair, a, b);
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    const BranchRow& row = kTable[i];
    if (row.source == source && branch_row_matches(pair, a, b, row)) return {row.predicted, i};
  }
  throw DomainError("no branching row applies");
}

BranchPrediction predict_branch(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  return predict_branch_at(pair, pair.index_of(a), pair.index_of(b));
}

TypeClass predict_branch_type(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  return predict_branch(pair, a, b).predicted;
}

}  // namespace dessin
