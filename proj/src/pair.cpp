#include "dessin/pair.hpp"

#include <algorithm>

#include "dessin/cycle_notation.hpp"
#include "dessin/disjoint_set.hpp"
#include "dessin/errors.hpp"
#include "json.hpp"

namespace dessin {

namespace {

void require_distinct(std::uint32_t a, std::uint32_t b) {
  if (a == b) throw DomainError("a and b must be distinct");
}

}  // namespace

PermutationPair::PermutationPair(Permutation white, Permutation black)
    : white_(std::move(white)), black_(std::move(black)), product_(compose(white_, black_)) {}

PermutationPair parse_pair(std::string_view white, std::string_view black, std::optional<std::uint32_t> degree) {
  auto w = parse_cycle_groups(white, degree);
  auto b = parse_cycle_groups(black, degree);
  auto ground = infer_ground({w, b}, degree);
  return PermutationPair(Permutation::from_cycles(ground, w), Permutation::from_cycles(ground, b));
}

std::string to_string(TypeClass t) {
  switch (t) {
    case TypeClass::U: return "U";
    case TypeClass::N: return "N";
    case TypeClass::P1: return "P1";
    case TypeClass::P2: return "P2";
    case TypeClass::P3: return "P3";
    case TypeClass::P4: return "P4";
  }
  return "?";
}

std::string to_string(ExceptionalClass e) {
  switch (e) {
    case ExceptionalClass::None: return "None";
    case ExceptionalClass::Tame1A: return "Tame1A";
    case ExceptionalClass::Tame1B: return "Tame1B";
    case ExceptionalClass::Tame2: return "Tame2";
    case ExceptionalClass::Wild: return "Wild";
  }
  return "?";
}

std::string to_string(GenusEffect g) {
  switch (g) {
    case GenusEffect::Raising: return "Raising";
    case GenusEffect::Lowering: return "Lowering";
    case GenusEffect::Preserving: return "Preserving";
  }
  return "?";
}

std::string PairReport::to_text() const {
  std::string out;
  out += "chi: " + std::to_string(chi) + "\n";
  out += "genus: " + std::to_string(genus) + "\n";
  out += "nu_white: " + std::to_string(nu_white) + "\n";
  out += "nu_black: " + std::to_string(nu_black) + "\n";
  out += "nu_product: " + std::to_string(nu_product) + "\n";
  out += std::string("transitive: ") + (transitive ? "true" : "false") + "\n";
  return out;
}

std::string PairReport::to_json() const {
  nlohmann::ordered_json j;
  j["chi"] = chi;
  j["genus"] = genus;
  j["nu_white"] = nu_white;
  j["nu_black"] = nu_black;
  j["nu_product"] = nu_product;
  j["transitive"] = transitive;
  return j.dump();
}

int euler_characteristic(const PermutationPair& pair) {
  return static_cast<int>(pair.white().num_cycles() + pair.black().num_cycles() + pair.product().num_cycles()) -
         static_cast<int>(pair.size());
}

int synthetic_genus(const PermutationPair& pair) { return 1 - euler_characteristic(pair) / 2; }

std::size_t num_group_orbits(const PermutationPair& pair) {
  DisjointSet ds(pair.size());
  for (std::uint32_t i = 0; i < pair.size(); ++i) {
    ds.unite(i, pair.white().at(i));
    ds.unite(i, pair.black().at(i));
  }
  return ds.count();
}

bool is_transitive(const PermutationPair& pair) { return num_group_orbits(pair) == 1; }

PairReport analyze(const PermutationPair& pair) {
  PairReport r;
  r.chi = euler_characteristic(pair);
  r.genus = 1 - r.chi / 2;
  r.nu_white = pair.white().num_cycles();
  r.nu_black = pair.black().num_cycles();
  r.nu_product = pair.product().num_cycles();
  r.transitive = is_transitive(pair);
  return r;
}

TypeClass classify_type_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b) {
  require_distinct(a, b);
  const Permutation& p = pair.product();
  std::uint32_t wa = pair.white().at(a);
  std::uint32_t oa = p.orbit_id(a);
  std::uint32_t owa = p.orbit_id(wa);
  std::uint32_t ob = p.orbit_id(b);
  // wa == a gives N (arcs exclude their source); wa == b gives P1.
  if (oa == owa && oa == ob) return p.arc_contains_at(a, b, wa) ? TypeClass::P1 : TypeClass::N;
  if (oa == owa) return TypeClass::P2;
  if (oa == ob) return TypeClass::P3;
  if (owa == ob) return TypeClass::P4;
  return TypeClass::U;
}

TypeClass classify_type(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  return classify_type_at(pair, pair.index_of(a), pair.index_of(b));
}

ExceptionalClass classify_exceptional_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b) {
  const Permutation& p = pair.product();
  std::uint32_t wa = pair.white().at(a);
  std::uint32_t wb = pair.white().at(b);
  TypeClass ab = classify_type_at(pair, a, b);
  TypeClass ba = classify_type_at(pair, b, a);
  if (ab == TypeClass::P2 && ba == TypeClass::P2) return ExceptionalClass::Wild;
  if (ab == TypeClass::P1 && p.arc_contains_at(wa, b, wb)) return ExceptionalClass::Tame1B;
  if (ba == TypeClass::P1 && p.arc_contains_at(wb, a, wa)) return ExceptionalClass::Tame1A;
  if (ab == TypeClass::P3 && p.same_orbit_at(wa, wb)) return ExceptionalClass::Tame2;
  return ExceptionalClass::None;
}

ExceptionalClass classify_exceptional(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  return classify_exceptional_at(pair, pair.index_of(a), pair.index_of(b));
}

GenusEffect genus_effect_at(const PermutationPair& pair, std::uint32_t a, std::uint32_t b) {
  require_distinct(a, b);
  const Permutation& p = pair.product();
  const std::uint32_t role[4] = {a, pair.white().at(a), b, pair.white().at(b)};
  auto isolated = [&](int r) {
    for (int other = 0; other < 4; ++other) {
      if (other != r && p.same_orbit_at(role[r], role[other])) return false;
    }
    return true;
  };
  if ((isolated(0) || isolated(2)) && (isolated(1) || isolated(3))) return GenusEffect::Raising;
  const std::uint32_t wa = role[1];
  const std::uint32_t wb = role[3];
  if (p.same_orbit_at(a, b) && p.same_orbit_at(wa, wb)) {
    bool ab_clear = !p.arc_contains_at(a, b, wa) && !p.arc_contains_at(a, b, wb);
    bool ba_clear = !p.arc_contains_at(b, a, wa) && !p.arc_contains_at(b, a, wb);
    if (ab_clear || ba_clear) return GenusEffect::Lowering;
  }
  return GenusEffect::Preserving;
}

GenusEffect genus_effect(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  return genus_effect_at(pair, pair.index_of(a), pair.index_of(b));
}

std::vector<Cycle> faces_of_edge(const PermutationPair& pair, const ElementLabel& e) {
  std::vector<Cycle> faces{pair.product().cycle_of(e)};
  ElementLabel we = pair.white()(e);
  if (!same_orbit(pair.product(), e, we)) faces.push_back(pair.product().cycle_of(we));
  return faces;
}

PermutationPair delete_edge(const PermutationPair& pair, const ElementLabel& e) {
  if (pair.size() == 1) throw DegenerateError("deleting the only edge leaves an empty pair");
  const std::uint32_t gone = pair.index_of(e);
  std::vector<ElementLabel> rest;
  for (const auto& x : pair.ground().elements()) {
    if (x != e) rest.push_back(x);
  }
  auto ground = std::make_shared<const GroundSet>(std::move(rest));
  auto splice = [&](const Permutation& p) {
    std::vector<std::uint32_t> image;
    image.reserve(p.size() - 1);
    for (std::uint32_t i = 0; i < p.size(); ++i) {
      if (i == gone) continue;
      std::uint32_t y = p.at(i);
      if (y == gone) y = p.at(gone);
      image.push_back(y > gone ? y - 1 : y);
    }
    return Permutation(ground, std::move(image));
  };
  return PermutationPair(splice(pair.white()), splice(pair.black()));
}

std::vector<ElementLabel> boundary_walk(const PermutationPair& pair, const ElementLabel& e) {
  const std::uint32_t start = pair.index_of(e);
  std::vector<ElementLabel> walk;
  std::uint32_t x = start;
  do {
    walk.push_back(pair.ground()[x]);
    walk.push_back(pair.ground()[pair.black().at(x)]);
    x = pair.product().at(x);
  } while (x != start);
  return walk;
}

std::vector<std::vector<ElementLabel>> group_orbits(const PermutationPair& pair) {
  DisjointSet ds(pair.size());
  for (std::uint32_t i = 0; i < pair.size(); ++i) {
    ds.unite(i, pair.white().at(i));
    ds.unite(i, pair.black().at(i));
  }
  std::vector<std::vector<ElementLabel>> orbits;
  std::vector<std::size_t> slot(pair.size(), ~std::size_t{0});
  for (std::uint32_t i = 0; i < pair.size(); ++i) {
    std::size_t root = ds.find(i);
    if (slot[root] == ~std::size_t{0}) {
      slot[root] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(pair.ground()[i]);
  }
  return orbits;
}

PermutationPair restrict_pair(const PermutationPair& pair, const std::vector<ElementLabel>& elements) {
  auto ground = std::make_shared<const GroundSet>(elements);
  auto restrict = [&](const Permutation& p) {
    std::vector<std::uint32_t> image(ground->size());
    for (std::uint32_t i = 0; i < ground->size(); ++i) {
      auto y = ground->find(p((*ground)[i]));
      if (!y) throw DomainError("subset is not invariant under the pair");
      image[i] = static_cast<std::uint32_t>(*y);
    }
    return Permutation(ground, std::move(image));
  };
  return PermutationPair(restrict(pair.white()), restrict(pair.black()));
}

std::string format_pair(const PermutationPair& pair) {
  return "white: " + pair.white().to_string() + "\nblack: " + pair.black().to_string() + "\n";
}

}  // namespace dessin
