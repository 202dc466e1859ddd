#include "dessin/appendix.hpp"

#include <algorithm>

#include "dessin/errors.hpp"

namespace dessin::appendix {

int degree(const Perm& p) { return static_cast<int>(p.size()) - 1; }

Perm identity(int n) {
  Perm p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  return p;
}

Perm mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Seq cycle(const Perm& p, int a) {
  Seq c{a};
  for (int x = p[a]; x != a; x = p[x]) c.push_back(x);
  return c;
}

std::vector<Seq> cycle_decomposition(const Perm& p) {
  std::vector<Seq> out;
  std::vector<bool> seen(p.size(), false);
  for (int i = 1; i <= degree(p); ++i) {
    if (seen[i]) continue;
    out.push_back(cycle(p, i));
    for (int x : out.back()) seen[x] = true;
  }
  return out;
}

bool contains(const Seq& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

int position(const Seq& s, int x) {
  auto it = std::find(s.begin(), s.end(), x);
  return it == s.end() ? 0 : static_cast<int>(it - s.begin()) + 1;
}

Seq make_cycle_coercible(const Seq& c, int n) {
  Seq tworowseq;
  Seq loopedcycle = c;
  loopedcycle.push_back(c[0]);
  for (int i = 1; i <= n; ++i) {
    if (contains(loopedcycle, i)) {
      tworowseq.push_back(loopedcycle[position(loopedcycle, i)]);
    } else {
      tworowseq.push_back(i);
    }
  }
  return tworowseq;
}

namespace {

// Sequence (1-based) to image vector.
Perm coerce(const Seq& s) {
  Perm p(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) p[i + 1] = s[i];
  return p;
}

}  // namespace

int compute_genus(const Perm& white, const Perm& black) {
  int chi = static_cast<int>(cycle_decomposition(white).size() + cycle_decomposition(black).size()) -
            degree(white) + static_cast<int>(cycle_decomposition(mul(black, white)).size());
  return 1 - chi / 2;
}

std::pair<Perm, Perm> reroute(const Perm& white, const Perm& black, int a, int b) {
  const int n = degree(white);
  Perm w = identity(n + 1);
  Perm bl = identity(n + 1);
  for (const Seq& c : cycle_decomposition(white)) {
    Seq cnew = make_cycle_coercible(c, n + 1);
    if (contains(c, b)) {
      cnew[position(cnew, b) - 1] = n + 1;
      cnew[n] = b;
    }
    w = mul(w, coerce(cnew));
  }
  for (const Seq& c : cycle_decomposition(black)) {
    Seq cnew = make_cycle_coercible(c, n + 1);
    if (contains(c, a)) {
      cnew[position(cnew, a) - 1] = n + 1;
      cnew[n] = cnew[a - 1];
      cnew[a - 1] = a;
    }
    bl = mul(bl, coerce(cnew));
  }
  return {w, bl};
}

Seq compute_arc(const Perm& g, int a, int b) {
  if (a == b) return {};
  Seq aorbit = cycle(g, a);
  Seq arc;
  for (std::size_t i = 1; i < aorbit.size(); ++i) {
    arc.push_back(aorbit[i]);
    if (aorbit[i] == b) return arc;
  }
  return arc;
}

bool is_type_u(const Perm& white, const Perm& black, int a, int b) {
  Perm g = mul(black, white);
  Seq aorbit = cycle(g, a);
  int wa = white[a];
  if (contains(aorbit, b) || contains(aorbit, wa)) return false;
  Seq borbit = cycle(g, b);
  if (contains(borbit, wa)) return false;
  return true;
}

bool is_type_n(const Perm& white, const Perm& black, int a, int b) {
  Seq aorbit = cycle(mul(black, white), a);
  int wa = white[a];
  if (!contains(aorbit, b) || !contains(aorbit, wa)) return false;
  return !contains(compute_arc(mul(black, white), a, b), wa);
}

bool is_type_p(const Perm& white, const Perm& black, int a, int b) {
  return !(is_type_u(white, black, a, b) || is_type_n(white, black, a, b));
}

bool is_type_p1(const Perm& white, const Perm& black, int a, int b) {
  Seq aorbit = cycle(mul(black, white), a);
  int wa = white[a];
  if (!contains(aorbit, b) || !contains(aorbit, wa)) return false;
  return contains(compute_arc(mul(black, white), a, b), wa);
}

bool is_type_p2(const Perm& white, const Perm& black, int a, int b) {
  Seq aorbit = cycle(mul(black, white), a);
  return contains(aorbit, white[a]) && !contains(aorbit, b);
}

bool is_type_p3(const Perm& white, const Perm& black, int a, int b) {
  Seq aorbit = cycle(mul(black, white), a);
  return contains(aorbit, b) && !contains(aorbit, white[a]);
}

bool is_type_p4(const Perm& white, const Perm& black, int a, int b) {
  Seq borbit = cycle(mul(black, white), b);
  return contains(borbit, white[a]) && !contains(borbit, a);
}

bool is_tame_exceptional_1b(const Perm& white, const Perm& black, int a, int b) {
  Seq acycle = cycle(mul(black, white), a);
  int wa = white[a];
  int wb = white[b];
  if (!contains(acycle, b) || !contains(acycle, wa) || !contains(acycle, wb)) return false;
  int x = position(acycle, wa);
  int y = position(acycle, wb);
  int z = position(acycle, b);
  return 1 < x && x < y && y <= z;
}

bool is_tame_exceptional_1a(const Perm& white, const Perm& black, int a, int b) {
  return is_tame_exceptional_1b(white, black, b, a);
}

bool is_tame_exceptional_2(const Perm& white, const Perm& black, int a, int b) {
  Perm g = mul(black, white);
  int wa = white[a];
  int wb = white[b];
  Seq aorbit = cycle(g, a);
  Seq waorbit = cycle(g, wa);
  return !contains(waorbit, a) && contains(aorbit, b) && contains(waorbit, wb);
}

bool is_tame_exceptional(const Perm& white, const Perm& black, int a, int b) {
  return is_tame_exceptional_1a(white, black, a, b) || is_tame_exceptional_1b(white, black, a, b) ||
         is_tame_exceptional_2(white, black, a, b);
}

bool is_wild_exceptional(const Perm& white, const Perm& black, int a, int b) {
  return is_type_p2(white, black, a, b) && is_type_p2(white, black, b, a);
}

bool is_exceptional(const Perm& white, const Perm& black, int a, int b) {
  return is_tame_exceptional(white, black, a, b) || is_wild_exceptional(white, black, b, a);
}

bool is_genus_raising(const Perm& white, const Perm& black, int a, int b) {
  Perm g = mul(black, white);
  Seq aorbit = cycle(g, a);
  if (contains(aorbit, b)) return false;
  int wa = white[a];
  int wb = white[b];
  Seq borbit = cycle(g, b);
  if ((contains(aorbit, wa) || contains(aorbit, wb)) && (contains(borbit, wa) || contains(borbit, wb))) {
    return false;
  }
  Seq waorbit = cycle(g, wa);
  if (contains(waorbit, wb)) return false;
  Seq wborbit = cycle(g, wb);
  if ((contains(waorbit, a) || contains(waorbit, b)) && (contains(wborbit, a) || contains(wborbit, b))) {
    return false;
  }
  return true;
}

bool is_genus_lowering(const Perm& white, const Perm& black, int a, int b) {
  Perm g = mul(black, white);
  Seq aorbit = cycle(g, a);
  if (!contains(aorbit, b)) return false;
  int wa = white[a];
  int wb = white[b];
  Seq waorbit = cycle(g, wa);
  if (!contains(waorbit, wb)) return false;
  Seq arcab = compute_arc(g, a, b);
  Seq arcba = compute_arc(g, b, a);
  return (!contains(arcab, wa) && !contains(arcab, wb)) || (!contains(arcba, wa) && !contains(arcba, wb));
}

bool is_genus_preserving(const Perm& white, const Perm& black, int a, int b) {
  return !(is_genus_raising(white, black, a, b) || is_genus_lowering(white, black, a, b));
}

std::pair<Perm, Perm> to_appendix(const PermutationPair& pair) {
  auto convert = [](const Permutation& p) {
    Perm out(p.size() + 1, 0);
    for (std::uint32_t i = 0; i < p.size(); ++i) out[i + 1] = static_cast<int>(p.at(i)) + 1;
    return out;
  };
  return {convert(pair.white()), convert(pair.black())};
}

PermutationPair from_appendix_reroute(const PermutationPair& pair, const ElementLabel& a, const Perm& white,
                                      const Perm& black) {
  const GroundSet& e = pair.ground();
  const int n = static_cast<int>(e.size());
  if (degree(white) != n + 1 || degree(black) != n + 1) throw StructuralError("expected degree n + 1");
  const int ai = static_cast<int>(e.index_of(a)) + 1;
  auto label_of = [&](int x) {
    if (x == n + 1) return a.black();
    if (x == ai) return a.white();
    return e[x - 1];
  };
  std::vector<ElementLabel> labels;
  for (int x = 1; x <= n + 1; ++x) labels.push_back(label_of(x));
  auto ground = std::make_shared<const GroundSet>(labels);
  auto convert = [&](const Perm& p) {
    std::vector<std::uint32_t> image(n + 1);
    for (int x = 1; x <= n + 1; ++x) {
      image[ground->index_of(label_of(x))] = static_cast<std::uint32_t>(ground->index_of(label_of(p[x])));
    }
    return Permutation(ground, std::move(image));
  };
  return PermutationPair(convert(white), convert(black));
}

TypeClass type_of(const Perm& white, const Perm& black, int a, int b) {
  if (is_type_u(white, black, a, b)) return TypeClass::U;
  if (is_type_n(white, black, a, b)) return TypeClass::N;
  if (is_type_p1(white, black, a, b)) return TypeClass::P1;
  if (is_type_p2(white, black, a, b)) return TypeClass::P2;
  if (is_type_p3(white, black, a, b)) return TypeClass::P3;
  if (is_type_p4(white, black, a, b)) return TypeClass::P4;
  throw StructuralError("no type predicate matched");
}

ExceptionalClass exceptional_of(const Perm& white, const Perm& black, int a, int b) {
  if (is_tame_exceptional_1a(white, black, a, b)) return ExceptionalClass::Tame1A;
  if (is_tame_exceptional_1b(white, black, a, b)) return ExceptionalClass::Tame1B;
  if (is_tame_exceptional_2(white, black, a, b)) return ExceptionalClass::Tame2;
  if (is_wild_exceptional(white, black, a, b)) return ExceptionalClass::Wild;
  return ExceptionalClass::None;
}

GenusEffect genus_effect_of(const Perm& white, const Perm& black, int a, int b) {
  if (is_genus_raising(white, black, a, b)) return GenusEffect::Raising;
  if (is_genus_lowering(white, black, a, b)) return GenusEffect::Lowering;
  return GenusEffect::Preserving;
}

}  // namespace dessin::appendix
