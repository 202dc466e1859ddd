#include "dessin/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "dessin/appendix.hpp"
#include "dessin/errors.hpp"
#include "dessin/graph_model.hpp"
#include "dessin/reroute.hpp"
#include "json.hpp"

namespace dessin {

bool is_transitive_oracle(const PermutationPair& pair) {
  const std::size_t n = pair.size();
  if (n == 0) return true;
  const Permutation wi = pair.white().inverse();
  const Permutation bi = pair.black().inverse();
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::uint32_t x = queue.back();
    queue.pop_back();
    for (std::uint32_t y : {pair.white().at(x), pair.black().at(x), wi.at(x), bi.at(x)}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == n;
}

std::vector<Permutation> all_permutations(std::uint32_t n) {
  auto ground = GroundSet::range(n);
  std::vector<std::uint32_t> image(n);
  std::iota(image.begin(), image.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(ground, image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

namespace {

void require_degree(std::uint32_t degree, std::uint32_t cap) {
  if (degree < 2 || degree > cap) {
    throw DomainError("degree must be between 2 and " + std::to_string(cap) + ", got " + std::to_string(degree));
  }
}

}  // namespace

void enumerate_pairs(std::uint32_t degree, const TupleVisitor& visit, std::uint32_t cap) {
  require_degree(degree, cap);
  const auto perms = all_permutations(degree);
  const GroundSet& e = perms.front().ground();
  for (const auto& w : perms) {
    for (const auto& b : perms) {
      PermutationPair pair(w, b);
      for (std::uint32_t a = 0; a < degree; ++a) {
        for (std::uint32_t c = 0; c < degree; ++c) {
          if (a != c) visit(pair, e[a], e[c]);
        }
      }
    }
  }
}

std::uint64_t expected_tuple_count(std::uint32_t degree) {
  std::uint64_t f = 1;
  for (std::uint32_t k = 2; k <= degree; ++k) f *= k;
  return f * f * degree * (degree - 1);
}

// ---------------------------------------------------------------------------
// Harness

namespace {

enum CheckId : std::size_t {
  kTypePartition,
  kTypeVsAppendix,
  kExceptionalVsAppendix,
  kExceptionalExclusive,
  kGenusEffectVsAppendix,
  kRerouteBookkeeping,
  kRerouteClauses,
  kRerouteVsAppendix,
  kModelOperation,
  kRerouteTheorem,
  kGenusChangeLemma,
  kBranchPrediction,
  kBranchRowsExclusive,
  kOrbitTransfer,
  kDoubleRerouteOneStep,
  kDoubleRerouteBookkeeping,
  kConjugationEquivalence,
  kConjugationNuEquality,
  kGenusEffectVsDelta,
  kGenusChangeBound,
  kExceptionalSymmetry,
  kTameLowersGenus,
  kWildPreservesGenus,
  kTransitivityTheorem,
  kNuDecreaseTransitive,
  kSphereCorollary,
  kWildWalkCriterion,
  kTameWalkCriterion,
  kTwoWalksSufficient,
  kOracleVsGraph,
  kCountingBoundary,
  kChiParity,
  kComponentAdditivity,
  kDeletionChiDelta,
  kDeletionFaces,
  kBoundaryWalkCover,
  kWalkValidity,
  kCheckCount
};

constexpr std::array<const char*, kCheckCount> kCheckNames{
    "type_partition",
    "type_vs_appendix",
    "exceptional_vs_appendix",
    "exceptional_exclusive",
    "genus_effect_vs_appendix",
    "reroute_bookkeeping",
    "reroute_clauses",
    "reroute_vs_appendix",
    "model_operation",
    "reroute_theorem",
    "genus_change_lemma",
    "branch_prediction",
    "branch_rows_exclusive",
    "orbit_transfer",
    "double_reroute_one_step",
    "double_reroute_bookkeeping",
    "conjugation_equivalence",
    "conjugation_nu_equality",
    "genus_effect_vs_delta",
    "genus_change_bound",
    "exceptional_symmetry",
    "tame_lowers_genus",
    "wild_preserves_genus",
    "transitivity_theorem",
    "nu_decrease_transitive",
    "sphere_corollary",
    "wild_walk_criterion",
    "tame_walk_criterion",
    "two_walks_sufficient",
    "oracle_vs_graph",
    "counting_boundary",
    "chi_parity",
    "component_additivity",
    "deletion_chi_delta",
    "deletion_faces",
    "boundary_walk_cover",
    "walk_validity",
};

// Orbit transfer cases whose precondition the lemma leaves implicit.
enum ObservationId : std::size_t { kTransfer7Degenerate, kTransfer8Degenerate, kTransfer9Degenerate, kObservationCount };

constexpr std::array<const char*, kObservationCount> kObservationNames{
    "orbit_transfer_7_with_white_a_eq_a",
    "orbit_transfer_8_with_white_a_in_a_b",
    "orbit_transfer_9_with_white_a_eq_b",
};

struct Context {
  std::uint64_t index;
  const PermutationPair* pair;
  std::string a;
  std::string b;
};

std::string str(bool v) { return v ? "true" : "false"; }
std::string str(int v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }

class Tally {
 public:
  Tally() : coverage(branch_table().size(), 0) {
    for (std::size_t i = 0; i < kCheckCount; ++i) checks[i].name = kCheckNames[i];
    for (std::size_t i = 0; i < kObservationCount; ++i) observations[i].name = kObservationNames[i];
  }

  // describe() -> {expected, actual}; called only on failure.
  template <typename Describe>
  void expect(CheckId id, bool ok, const Context& ctx, Describe describe) {
    CheckResult& c = checks[id];
    ++c.checked;
    if (ok) return;
    ++c.failed;
    if (c.first && c.first->index <= ctx.index) return;
    auto [expected, actual] = describe();
    c.first = Counterexample{ctx.index, ctx.pair->white().to_string(), ctx.pair->black().to_string(), ctx.a, ctx.b,
                             expected, actual};
  }

  void observe(ObservationId id, bool held) {
    ++observations[id].seen;
    if (held) ++observations[id].held;
  }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < kCheckCount; ++i) {
      CheckResult& c = checks[i];
      const CheckResult& o = other.checks[i];
      c.checked += o.checked;
      c.failed += o.failed;
      if (o.first && (!c.first || o.first->index < c.first->index)) c.first = o.first;
    }
    for (std::size_t i = 0; i < kObservationCount; ++i) {
      observations[i].seen += other.observations[i].seen;
      observations[i].held += other.observations[i].held;
    }
    for (std::size_t i = 0; i < coverage.size(); ++i) coverage[i] += other.coverage[i];
    tame_transitive += other.tame_transitive;
    tame_nontransitive += other.tame_nontransitive;
    pairs += other.pairs;
    tuples += other.tuples;
  }

  std::array<CheckResult, kCheckCount> checks;
  std::array<Observation, kObservationCount> observations;
  std::vector<std::uint64_t> coverage;
  std::uint64_t tame_transitive = 0;
  std::uint64_t tame_nontransitive = 0;
  std::uint64_t pairs = 0;
  std::uint64_t tuples = 0;
};

std::size_t nu(const Permutation& p) { return p.num_cycles(); }

TypeClass apply_mutant(TypeClass t, Mutant m) {
  if (m == Mutant::SwapNP1) {
    if (t == TypeClass::N) return TypeClass::P1;
    if (t == TypeClass::P1) return TypeClass::N;
  }
  return t;
}

// The direct description of the double reroute: aB before b and bB before a
// in white, then a -> aW, b -> bW; black renames a -> aB, b -> bB and fixes
// aW, bW.
PermutationPair double_reroute_direct(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  const ElementLabel aw = a.white(), ab = a.black(), bw = b.white(), bb = b.black();
  std::vector<ElementLabel> labels;
  for (const auto& x : pair.ground().elements()) {
    if (x != a && x != b) labels.push_back(x);
  }
  for (const auto& x : {aw, ab, bw, bb}) labels.push_back(x);
  auto ground = std::make_shared<const GroundSet>(std::move(labels));
  auto rename = [&](const ElementLabel& x, const ElementLabel& to_a, const ElementLabel& to_b) {
    return x == a ? to_a : x == b ? to_b : x;
  };
  std::vector<Cycle> white;
  for (const auto& c : pair.white().cycles()) {
    Cycle next;
    for (const auto& x : c) {
      if (x == b) next.push_back(ab);
      if (x == a) next.push_back(bb);
      next.push_back(rename(x, aw, bw));
    }
    white.push_back(next);
  }
  std::vector<Cycle> black;
  for (const auto& c : pair.black().cycles()) {
    Cycle next;
    for (const auto& x : c) next.push_back(rename(x, ab, bb));
    black.push_back(next);
  }
  black.push_back({aw});
  black.push_back({bw});
  return PermutationPair(Permutation::from_cycles(ground, white), Permutation::from_cycles(ground, black));
}

// Alternate-definition clauses of the reroute, evaluated on labels.
bool reroute_clauses_hold(const PermutationPair& pair, const RerouteResult& r) {
  const Permutation& w = pair.white();
  const Permutation& bl = pair.black();
  const Permutation& w2 = r.pair.white();
  const Permutation& b2 = r.pair.black();
  const ElementLabel& a = r.a;
  const ElementLabel& b = r.b;
  const ElementLabel& aw = r.a_white;
  const ElementLabel& ab = r.a_black;
  const ElementLabel wa = w(a);
  // op1; when white(a) = b op2 decides the image of aW.
  if (wa == a) {
    if (w2(aw) != aw) return false;
  } else {
    for (const auto& x : pair.ground().elements()) {
      if (w(x) == a && x != a && w2(x) != aw) return false;
    }
    if (wa != b && w2(aw) != wa) return false;
  }
  // op2
  if (wa == b) {
    if (w2(aw) != ab) return false;
  } else {
    for (const auto& x : pair.ground().elements()) {
      if (w(x) == b && x != a && w2(x) != ab) return false;
    }
  }
  // op3
  if (w2(ab) != b) return false;
  // op4, op7
  for (const auto& x : pair.ground().elements()) {
    if (x == a) continue;
    if (w(x) != a && w(x) != b && w2(x) != w(x)) return false;
    if (bl(x) != a && b2(x) != bl(x)) return false;
  }
  // op5
  if (b2(aw) != aw) return false;
  // op6
  if (bl(a) == a) {
    if (b2(ab) != ab) return false;
  } else {
    for (const auto& x : pair.ground().elements()) {
      if (bl(x) == a && x != a && b2(x) != ab) return false;
    }
    if (b2(ab) != bl(a)) return false;
  }
  return true;
}

// Expected model of the reroute: edge a leaves; aW joins white_a to a new
// black vertex; aB joins black_a to white_b.
ModelPartition expected_reroute_model(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  ModelPartition m = model_partition(build_model(pair));
  const ElementLabel aw = a.white(), ab = a.black();
  for (auto& cls : m.white) {
    bool has_b = std::find(cls.begin(), cls.end(), b) != cls.end();
    for (auto& x : cls) {
      if (x == a) x = aw;
    }
    if (has_b) cls.push_back(ab);
    std::sort(cls.begin(), cls.end());
  }
  for (auto& cls : m.black) {
    for (auto& x : cls) {
      if (x == a) x = ab;
    }
    std::sort(cls.begin(), cls.end());
  }
  m.black.push_back({aw});
  std::sort(m.white.begin(), m.white.end());
  std::sort(m.black.begin(), m.black.end());
  return m;
}

bool is_product_sequence(const PermutationPair& pair, const std::vector<ElementLabel>& seq) {
  for (const auto& x : seq) {
    if (!pair.ground().contains(x)) return false;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (pair.product()(seq[i]) != seq[i + 1]) return false;
  }
  return true;
}

std::string format_seq(const std::vector<ElementLabel>& seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? ", " : "") + seq[i].to_string();
  return out + "]";
}

void check_orbit_transfer(const PermutationPair& pair, const RerouteResult& r, std::uint32_t a, std::uint32_t b,
                          const Context& ctx, Tally& tally) {
  const Permutation& p = pair.product();
  const GroundSet& e = pair.ground();
  const std::uint32_t wa = pair.white().at(a);
  const std::array<std::uint32_t, 3> role{a, wa, b};  // A, WA, B
  const ElementLabel lwa = e[wa], lb = e[b];
  const ElementLabel aw = r.a_white, ab = r.a_black;
  auto distinguished = [&](std::uint32_t x) { return x == a || x == wa || x == b; };

  for (int s = 0; s < 3; ++s) {
    const std::uint32_t x0 = role[s];
    std::vector<ElementLabel> interior;
    std::uint32_t x = p.at(x0);
    while (!distinguished(x)) {
      interior.push_back(e[x]);
      x = p.at(x);
    }
    for (int t = 0; t < 3; ++t) {
      if (role[t] != x) continue;
      int assertion = 0;
      bool explicit_ok = true;
      bool implied_ok = true;
      std::vector<ElementLabel> head, tail;
      // Assertion numbering follows the lemma.
      if (s == 0 && t == 1) { assertion = 1; head = {ab}; tail = {lb}; }
      if (s == 1 && t == 2) { assertion = 2; head = {aw, lwa}; tail = {ab}; explicit_ok = wa != a && wa != b; }
      if (s == 2 && t == 0) { assertion = 3; head = {lb}; tail = {aw}; explicit_ok = wa != a; }
      if (s == 2 && t == 1) { assertion = 4; head = {lb}; tail = {lb}; }
      if (s == 1 && t == 0) { assertion = 5; head = {aw, lwa}; tail = {aw}; explicit_ok = wa != a && wa != b; }
      if (s == 0 && t == 2) { assertion = 6; head = {ab}; tail = {ab}; explicit_ok = wa != b; }
      if (s == 0 && t == 0) { assertion = 7; head = {ab}; tail = {aw}; implied_ok = wa != a; }
      if (s == 1 && t == 1) { assertion = 8; head = {aw, lwa}; tail = {lb}; implied_ok = wa != a && wa != b; }
      if (s == 2 && t == 2) { assertion = 9; head = {lb}; tail = {ab}; implied_ok = wa != b; }
      if (!explicit_ok) continue;
      std::vector<ElementLabel> seq = head;
      seq.insert(seq.end(), interior.begin(), interior.end());
      seq.insert(seq.end(), tail.begin(), tail.end());
      const bool holds = is_product_sequence(r.pair, seq);
      if (!implied_ok) {
        tally.observe(static_cast<ObservationId>(kTransfer7Degenerate + (assertion - 7)), holds);
        continue;
      }
      tally.expect(kOrbitTransfer, holds, ctx, [&] {
        return std::pair{"assertion " + std::to_string(assertion) + ": " + format_seq(seq) + " is a product sequence",
                         std::string("not a product sequence")};
      });
    }
  }
}

struct PairFacts {
  int chi = 0;
  int genus = 0;
  std::size_t nu_product = 0;
  bool transitive = false;
  BicoloredGraph graph;
  appendix::Perm white;
  appendix::Perm black;
};

void check_tuple(const PermutationPair& pair, const PairFacts& f, std::uint32_t a, std::uint32_t b,
                 std::uint64_t index, const VerifyOptions& opt, Tally& tally) {
  const GroundSet& e = pair.ground();
  const ElementLabel la = e[a], lb = e[b];
  const Context ctx{index, &pair, la.to_string(), lb.to_string()};
  const int ia = static_cast<int>(a) + 1, ib = static_cast<int>(b) + 1;
  ++tally.tuples;

  // Classification against the reference predicates.
  const TypeClass type = apply_mutant(classify_type_at(pair, a, b), opt.mutant);
  {
    const std::array<bool, 6> preds{
        appendix::is_type_u(f.white, f.black, ia, ib),  appendix::is_type_n(f.white, f.black, ia, ib),
        appendix::is_type_p1(f.white, f.black, ia, ib), appendix::is_type_p2(f.white, f.black, ia, ib),
        appendix::is_type_p3(f.white, f.black, ia, ib), appendix::is_type_p4(f.white, f.black, ia, ib)};
    const auto hits = std::count(preds.begin(), preds.end(), true);
    tally.expect(kTypePartition, hits == 1, ctx, [&] { return std::pair{std::string("1"), std::to_string(hits)}; });
    const bool p_agrees = appendix::is_type_p(f.white, f.black, ia, ib) == is_type_p(type);
    const TypeClass ref = appendix::type_of(f.white, f.black, ia, ib);
    tally.expect(kTypeVsAppendix, ref == type && p_agrees, ctx,
                 [&] { return std::pair{to_string(ref), to_string(type)}; });
  }
  const ExceptionalClass ex = classify_exceptional_at(pair, a, b);
  {
    const ExceptionalClass ref = appendix::exceptional_of(f.white, f.black, ia, ib);
    const bool any = appendix::is_exceptional(f.white, f.black, ia, ib);
    tally.expect(kExceptionalVsAppendix, ref == ex && any == (ex != ExceptionalClass::None), ctx,
                 [&] { return std::pair{to_string(ref), to_string(ex)}; });
    const int hits = appendix::is_tame_exceptional_1a(f.white, f.black, ia, ib) +
                     appendix::is_tame_exceptional_1b(f.white, f.black, ia, ib) +
                     appendix::is_tame_exceptional_2(f.white, f.black, ia, ib) +
                     appendix::is_wild_exceptional(f.white, f.black, ia, ib);
    tally.expect(kExceptionalExclusive, hits <= 1, ctx,
                 [&] { return std::pair{std::string("at most 1"), std::to_string(hits)}; });
  }
  const GenusEffect effect = genus_effect_at(pair, a, b);
  {
    const GenusEffect ref = appendix::genus_effect_of(f.white, f.black, ia, ib);
    tally.expect(kGenusEffectVsAppendix, ref == effect, ctx,
                 [&] { return std::pair{to_string(ref), to_string(effect)}; });
  }

  // Reroute.
  const RerouteResult r = reroute(pair, la, lb);
  {
    const bool ok = r.pair.size() == pair.size() + 1 && nu(r.pair.white()) == nu(pair.white()) &&
                    nu(r.pair.black()) == nu(pair.black()) + 1 && r.pair.ground().contains(r.a_white) &&
                    r.pair.ground().contains(r.a_black) && !r.pair.ground().contains(la);
    tally.expect(kRerouteBookkeeping, ok, ctx, [&] {
      return std::pair{std::string("|E|+1, nu(white) kept, nu(black)+1"), format_pair(r.pair)};
    });
  }
  tally.expect(kRerouteClauses, reroute_clauses_hold(pair, r), ctx,
               [&] { return std::pair{std::string("op1-op7 hold"), format_pair(r.pair)}; });
  {
    auto [w2, b2] = appendix::reroute(f.white, f.black, ia, ib);
    const PermutationPair ref = appendix::from_appendix_reroute(pair, la, w2, b2);
    tally.expect(kRerouteVsAppendix, ref == r.pair, ctx,
                 [&] { return std::pair{format_pair(ref), format_pair(r.pair)}; });
  }
  {
    const ModelPartition want = expected_reroute_model(pair, la, lb);
    const ModelPartition got = model_partition(build_model(r.pair));
    tally.expect(kModelOperation, want == got, ctx,
                 [&] { return std::pair{std::string("surgered model"), format_pair(r.pair)}; });
  }
  const int chi_r = euler_characteristic(r.pair);
  const int g_r = 1 - chi_r / 2;
  {
    const int want = type == TypeClass::U ? 1 : type == TypeClass::N ? -1 : 0;
    tally.expect(kRerouteTheorem, g_r - f.genus == want, ctx, [&] {
      return std::pair{"type " + to_string(type) + " => delta " + str(want), "delta " + str(g_r - f.genus)};
    });
    const int lhs = f.chi - chi_r;
    const int rhs = static_cast<int>(f.nu_product) - static_cast<int>(nu(r.pair.product()));
    tally.expect(kGenusChangeLemma, lhs == rhs, ctx, [&] { return std::pair{str(rhs), str(lhs)}; });
  }

  // Branching tables.
  {
    const BranchPrediction pred = predict_branch_at(pair, a, b);
    const TypeClass actual = classify_type(r.pair, lb, r.a_white);
    const auto& row = branch_table()[pred.row];
    ++tally.coverage[pred.row];
    tally.expect(kBranchPrediction, pred.predicted == actual, ctx, [&] {
      return std::pair{std::string(row.id) + " -> " + to_string(pred.predicted), to_string(actual)};
    });
    const std::uint32_t wb = pair.white().at(b);
    const bool degenerate = wb == a || wb == b;
    int hits = 0;
    for (const auto& candidate : branch_table()) {
      if (candidate.source != classify_type_at(pair, a, b)) continue;
      if ((candidate.test == RowTest::Equals) != degenerate) continue;
      hits += branch_row_matches(pair, a, b, candidate);
    }
    tally.expect(kBranchRowsExclusive, hits == 1, ctx,
                 [&] { return std::pair{std::string("1 row"), std::to_string(hits) + " rows"}; });
  }

  check_orbit_transfer(pair, r, a, b, ctx, tally);

  // Double reroute and conjugation.
  const PermutationPair dd = double_reroute(pair, la, lb);
  {
    const PermutationPair direct = double_reroute_direct(pair, la, lb);
    tally.expect(kDoubleRerouteOneStep, dd == direct, ctx,
                 [&] { return std::pair{format_pair(direct), format_pair(dd)}; });
    const bool ok = dd.size() == pair.size() + 2 && nu(dd.black()) == nu(pair.black()) + 2 &&
                    nu(dd.white()) == nu(pair.white());
    tally.expect(kDoubleRerouteBookkeeping, ok, ctx,
                 [&] { return std::pair{std::string("|E|+2, nu(black)+2"), format_pair(dd)}; });
  }
  const PermutationPair conj = conjugate_by_transposition(pair, la, lb);
  const bool conj_transitive = is_transitive_oracle(conj);
  const std::size_t nu_t = nu(conj.product());
  {
    const bool dd_transitive = is_transitive_oracle(dd);
    const int g_dd = synthetic_genus(dd);
    const int g_t = synthetic_genus(conj);
    tally.expect(kConjugationEquivalence, dd_transitive == conj_transitive && g_dd == g_t, ctx, [&] {
      return std::pair{"transitive " + str(conj_transitive) + ", genus " + str(g_t),
                       "transitive " + str(dd_transitive) + ", genus " + str(g_dd)};
    });
    tally.expect(kConjugationNuEquality, nu(dd.product()) == nu_t, ctx,
                 [&] { return std::pair{str(nu_t), str(nu(dd.product()))}; });
  }
  const int diff = static_cast<int>(f.nu_product) - static_cast<int>(nu_t);
  const int delta_g = diff / 2;
  {
    const GenusEffect want = diff > 0 ? GenusEffect::Raising : diff < 0 ? GenusEffect::Lowering : GenusEffect::Preserving;
    tally.expect(kGenusEffectVsDelta, want == effect, ctx, [&] { return std::pair{to_string(want), to_string(effect)}; });
    tally.expect(kGenusChangeBound, diff % 2 == 0 && std::abs(delta_g) <= 1, ctx,
                 [&] { return std::pair{std::string("|dg| <= 1"), "nu difference " + str(diff)}; });
  }
  {
    const ExceptionalClass rev = classify_exceptional_at(pair, b, a);
    bool ok = (ex == ExceptionalClass::Tame1A) == (rev == ExceptionalClass::Tame1B) &&
              (ex == ExceptionalClass::Tame1B) == (rev == ExceptionalClass::Tame1A) &&
              (ex == ExceptionalClass::Wild) == (rev == ExceptionalClass::Wild) &&
              (ex == ExceptionalClass::Tame2) == (rev == ExceptionalClass::Tame2);
    tally.expect(kExceptionalSymmetry, ok, ctx,
                 [&] { return std::pair{"mirror of " + to_string(ex), to_string(rev)}; });
    if (is_tame(ex)) {
      tally.expect(kTameLowersGenus, delta_g == -1, ctx,
                   [&] { return std::pair{std::string("-1"), str(delta_g)}; });
    }
    if (ex == ExceptionalClass::Wild) {
      tally.expect(kWildPreservesGenus, delta_g == 0, ctx, [&] { return std::pair{std::string("0"), str(delta_g)}; });
    }
  }

  // Transitivity statements only concern transitive pairs.
  if (!f.transitive) return;
  if (ex == ExceptionalClass::None) {
    tally.expect(kTransitivityTheorem, conj_transitive, ctx,
                 [&] { return std::pair{std::string("transitive"), std::string("not transitive")}; });
  }
  if (nu_t < f.nu_product) {
    tally.expect(kNuDecreaseTransitive, conj_transitive, ctx,
                 [&] { return std::pair{std::string("transitive"), std::string("not transitive")}; });
  }
  if (f.genus == 0 && ex != ExceptionalClass::Wild) {
    const bool want = nu_t <= f.nu_product;
    tally.expect(kSphereCorollary, want == conj_transitive, ctx,
                 [&] { return std::pair{str(want), str(conj_transitive)}; });
  }
  const WalkTests walks = walks_avoiding_at(pair, f.graph, a, b);
  tally.expect(kWildWalkCriterion, walks.any_four() == conj_transitive, ctx,
               [&] { return std::pair{str(conj_transitive), str(walks.any_four())}; });
  if (walks.any_two()) {
    tally.expect(kTwoWalksSufficient, conj_transitive, ctx,
                 [&] { return std::pair{std::string("transitive"), std::string("not transitive")}; });
  }
  if (is_tame(ex)) {
    tally.expect(kTameWalkCriterion, walks.any_two() == conj_transitive, ctx,
                 [&] { return std::pair{str(conj_transitive), str(walks.any_two())}; });
    if (conj_transitive) {
      ++tally.tame_transitive;
    } else {
      ++tally.tame_nontransitive;
    }
  }
}

// Product cycles expected after deleting a generic edge e.
std::vector<Cycle> expected_deletion_faces(const PermutationPair& pair, const ElementLabel& e) {
  const Permutation& p = pair.product();
  const ElementLabel we = pair.white()(e);
  std::vector<Cycle> out;
  for (const auto& c : p.cycles()) {
    if (std::find(c.begin(), c.end(), e) == c.end() && std::find(c.begin(), c.end(), we) == c.end()) {
      out.push_back(c);
    }
  }
  if (same_orbit(p, e, we)) {
    const auto x = minimal_sequence(p, e, we);  // e .. w(e)
    const auto y = minimal_sequence(p, we, e);  // w(e) .. e
    out.emplace_back(x.begin() + 1, x.end() - 1);
    out.emplace_back(y.begin(), y.end() - 1);
  } else {
    const Cycle ce = p.cycle_of(e);
    const Cycle cw = p.cycle_of(we);
    // Rotate so that e and w(e) come first.
    auto rotate_to = [](Cycle c, const ElementLabel& x) {
      std::rotate(c.begin(), std::find(c.begin(), c.end(), x), c.end());
      return c;
    };
    Cycle x = rotate_to(ce, e);
    Cycle y = rotate_to(cw, we);
    Cycle merged(x.begin() + 1, x.end());
    merged.insert(merged.end(), y.begin(), y.end());
    out.push_back(merged);
  }
  return out;
}

void check_pair(const PermutationPair& pair, const PairFacts& f, std::uint64_t index, Tally& tally) {
  const Context ctx{index, &pair, "-", "-"};
  ++tally.pairs;
  {
    const bool via_graph = is_transitive_via_graph(pair);
    tally.expect(kOracleVsGraph, via_graph == f.transitive, ctx,
                 [&] { return std::pair{str(f.transitive), str(via_graph)}; });
  }
  const std::size_t k = num_components(f.graph);
  tally.expect(kCountingBoundary, f.nu_product >= k, ctx,
               [&] { return std::pair{">= " + str(k), str(f.nu_product)}; });
  tally.expect(kChiParity, f.chi % 2 == 0, ctx, [&] { return std::pair{std::string("even"), str(f.chi)}; });
  {
    int chi_sum = 0;
    int genus_sum = 0;
    const auto orbits = group_orbits(pair);
    for (const auto& o : orbits) {
      const PermutationPair part = restrict_pair(pair, o);
      chi_sum += euler_characteristic(part);
      genus_sum += synthetic_genus(part);
    }
    const bool ok = chi_sum == f.chi && genus_sum == f.genus + static_cast<int>(orbits.size()) - 1;
    tally.expect(kComponentAdditivity, ok, ctx, [&] {
      return std::pair{"chi " + str(f.chi) + ", genus sum " + str(f.genus + static_cast<int>(orbits.size()) - 1),
                       "chi " + str(chi_sum) + ", genus sum " + str(genus_sum)};
    });
  }
  if (pair.size() >= 2) {
    for (const auto& e : pair.ground().elements()) {
      const PermutationPair cut = delete_edge(pair, e);
      if (pair.white()(e) == e || pair.black()(e) == e) continue;
      const bool one_face = faces_of_edge(pair, e).size() == 1;
      const int want = f.chi + (one_face ? 2 : 0);
      const int got = euler_characteristic(cut);
      Context ectx = ctx;
      ectx.a = e.to_string();
      tally.expect(kDeletionChiDelta, want == got, ectx, [&] { return std::pair{str(want), str(got)}; });
      const Permutation faces = Permutation::from_cycles(cut.ground_ptr(), expected_deletion_faces(pair, e));
      tally.expect(kDeletionFaces, faces == cut.product(), ectx,
                   [&] { return std::pair{faces.to_string(), cut.product().to_string()}; });
    }
  }
  {
    std::vector<int> seen(pair.size(), 0);
    bool ok = true;
    for (const auto& c : pair.product().cycles()) {
      const auto walk = boundary_walk(pair, c.front());
      if (walk.size() != 2 * c.size()) ok = false;
      std::vector<ElementLabel> border = c;
      for (const auto& x : c) border.push_back(pair.black()(x));
      std::sort(border.begin(), border.end());
      border.erase(std::unique(border.begin(), border.end()), border.end());
      std::vector<ElementLabel> in_walk = walk;
      std::sort(in_walk.begin(), in_walk.end());
      in_walk.erase(std::unique(in_walk.begin(), in_walk.end()), in_walk.end());
      if (border != in_walk) ok = false;
      for (const auto& x : walk) ++seen[pair.index_of(x)];
      for (Trim trim : {Trim::None, Trim::First, Trim::Last, Trim::Both}) {
        std::vector<ElementLabel> seq = c;
        seq.push_back(c.front());
        const Walk w = walk_from_sequence(pair, seq, trim);
        bool valid = is_valid_walk(f.graph, w);
        for (const auto& x : w.edges) valid = valid && std::binary_search(border.begin(), border.end(), x);
        tally.expect(kWalkValidity, valid, ctx, [&] { return std::pair{std::string("valid walk"), w.to_string()}; });
      }
    }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](int s) { return s == 2; });
    tally.expect(kBoundaryWalkCover, ok, ctx,
                 [&] { return std::pair{std::string("each edge twice"), std::string("uneven cover")}; });
  }
}

PairFacts facts_of(const PermutationPair& pair) {
  PairFacts f;
  f.chi = euler_characteristic(pair);
  f.genus = 1 - f.chi / 2;
  f.nu_product = pair.product().num_cycles();
  f.transitive = is_transitive_oracle(pair);
  f.graph = build_model(pair);
  std::tie(f.white, f.black) = appendix::to_appendix(pair);
  return f;
}

void check_all_tuples(const PermutationPair& pair, std::uint64_t pair_index, const VerifyOptions& opt, Tally& tally) {
  const PairFacts f = facts_of(pair);
  const std::uint32_t n = static_cast<std::uint32_t>(pair.size());
  const std::uint64_t base = pair_index * n * (n - 1);
  check_pair(pair, f, base, tally);
  std::uint64_t k = 0;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a == b) continue;
      check_tuple(pair, f, a, b, base + k++, opt, tally);
    }
  }
}

}  // namespace

bool VerificationReport::all_passed() const { return total_failures() == 0; }

std::uint64_t VerificationReport::total_failures() const {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw DomainError("no check named " + name);
}

bool VerificationReport::all_rows_covered() const {
  return !branch_row_coverage.empty() &&
         std::all_of(branch_row_coverage.begin(), branch_row_coverage.end(), [](std::uint64_t c) { return c > 0; });
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree;
  j["exhaustive"] = exhaustive;
  j["pairs_checked"] = pairs_checked;
  j["cases_checked"] = cases_checked;
  j["all_passed"] = all_passed();
  j["total_failures"] = total_failures();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["checked"] = c.checked;
    cj["failed"] = c.failed;
    if (c.first) {
      cj["counterexample"] = {{"index", c.first->index},       {"white", c.first->white},
                              {"black", c.first->black},       {"a", c.first->a},
                              {"b", c.first->b},               {"expected", c.first->expected},
                              {"actual", c.first->actual}};
    }
    arr.push_back(cj);
  }
  auto& rows = j["branch_rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < branch_row_coverage.size(); ++i) {
    rows.push_back({{"row", std::string(branch_table()[i].id)}, {"fired", branch_row_coverage[i]}});
  }
  j["tame_transitive_witnesses"] = tame_transitive_witnesses;
  j["tame_nontransitive_witnesses"] = tame_nontransitive_witnesses;
  auto& obs = j["observations"] = nlohmann::ordered_json::array();
  for (const auto& o : observations) obs.push_back({{"name", o.name}, {"seen", o.seen}, {"held", o.held}});
  return j.dump(2);
}

VerificationReport verify_all(const VerifyOptions& opt) {
  if (opt.degree < 2 || opt.degree > 8) throw DomainError("degree must be between 2 and 8");
  const bool exhaustive = opt.degree <= opt.max_degree;
  const auto perms = all_permutations(std::min<std::uint32_t>(opt.degree, opt.max_degree));
  const std::uint64_t num_pairs = exhaustive ? perms.size() * perms.size() : opt.samples;

  // Sampled pairs are drawn up front so the result does not depend on threads.
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> sampled;
  if (!exhaustive) {
    std::mt19937_64 rng(opt.seed);
    std::vector<std::uint32_t> base(opt.degree);
    std::iota(base.begin(), base.end(), 0u);
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
      auto w = base, b = base;
      std::shuffle(w.begin(), w.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      sampled.emplace_back(std::move(w), std::move(b));
    }
  }
  auto ground = GroundSet::range(opt.degree);
  auto pair_at = [&](std::uint64_t i) {
    if (exhaustive) return PermutationPair(perms[i / perms.size()], perms[i % perms.size()]);
    return PermutationPair(Permutation(ground, sampled[i].first), Permutation(ground, sampled[i].second));
  };

  const unsigned threads = std::max(1u, opt.threads);
  std::vector<Tally> tallies(threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t i = t; i < num_pairs; i += threads) check_all_tuples(pair_at(i), i, opt, tallies[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (const auto& t : tallies) total.merge(t);

  VerificationReport report;
  report.degree = opt.degree;
  report.exhaustive = exhaustive;
  report.pairs_checked = total.pairs;
  report.cases_checked = total.tuples;
  report.checks.assign(total.checks.begin(), total.checks.end());
  report.branch_row_coverage = total.coverage;
  report.tame_transitive_witnesses = total.tame_transitive;
  report.tame_nontransitive_witnesses = total.tame_nontransitive;
  report.observations.assign(total.observations.begin(), total.observations.end());
  return report;
}

VerificationReport verify_all(std::uint32_t degree) {
  VerifyOptions opt;
  opt.degree = degree;
  return verify_all(opt);
}

// ---------------------------------------------------------------------------
// Tree case on raw image arrays.

namespace {

using Raw = std::array<std::uint8_t, 8>;

int raw_cycles(const Raw& p, int n) {
  std::uint32_t seen = 0;
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (seen >> i & 1u) continue;
    ++count;
    for (int x = i; !(seen >> x & 1u); x = p[x]) seen |= 1u << x;
  }
  return count;
}

Raw raw_compose(const Raw& p, const Raw& q, int n) {
  Raw r{};
  for (int i = 0; i < n; ++i) r[i] = p[q[i]];
  return r;
}

bool raw_transitive(const Raw& w, const Raw& b, int n) {
  Raw wi{}, bi{};
  for (int i = 0; i < n; ++i) {
    wi[w[i]] = static_cast<std::uint8_t>(i);
    bi[b[i]] = static_cast<std::uint8_t>(i);
  }
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int x = 0; x < n; ++x) {
      if (!(frontier >> x & 1u)) continue;
      next |= 1u << w[x] | 1u << b[x] | 1u << wi[x] | 1u << bi[x];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

std::string raw_string(const Raw& p, int n) {
  std::string out;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if (seen >> i & 1u) continue;
    out += "(";
    for (int x = i; !(seen >> x & 1u); x = p[x]) {
      if (x != i) out += ",";
      out += std::to_string(x + 1);
      seen |= 1u << x;
    }
    out += ")";
  }
  return out;
}

}  // namespace

std::string TreeCaseReport::to_json() const {
  nlohmann::ordered_json j;
  j["max_edges"] = max_edges;
  j["trees"] = trees;
  j["conjugations"] = conjugations;
  j["failures"] = failures;
  if (!first_failure.empty()) j["first_failure"] = first_failure;
  return j.dump(2);
}

TreeCaseReport verify_tree_case(std::uint32_t max_edges) {
  if (max_edges < 1 || max_edges > 8) throw DomainError("max_edges must be between 1 and 8");
  TreeCaseReport report;
  report.max_edges = max_edges;
  for (int n = 1; n <= static_cast<int>(max_edges); ++n) {
    std::vector<Raw> perms;
    Raw p{};
    std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
    std::vector<int> cycles(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) cycles[i] = raw_cycles(perms[i], n);

    for (std::size_t wi = 0; wi < perms.size(); ++wi) {
      for (std::size_t bi = 0; bi < perms.size(); ++bi) {
        const Raw& w = perms[wi];
        const Raw& b = perms[bi];
        // One face and chi = 2 means a plane tree.
        if (cycles[wi] + cycles[bi] + 1 - n != 2) continue;
        if (raw_cycles(raw_compose(w, b, n), n) != 1) continue;
        ++report.trees;
        for (const Raw& s : perms) {
          Raw si{};
          for (int i = 0; i < n; ++i) si[s[i]] = static_cast<std::uint8_t>(i);
          const Raw ws = raw_compose(raw_compose(s, w, n), si, n);
          const bool transitive = raw_transitive(ws, b, n);
          const bool one_face = raw_cycles(raw_compose(ws, b, n), n) == 1;
          ++report.conjugations;
          if (transitive != one_face) {
            if (report.failures++ == 0) {
              report.first_failure = "white " + raw_string(w, n) + " black " + raw_string(b, n) + " s " +
                                     raw_string(s, n) + ": transitive " + str(transitive) + ", one face " +
                                     str(one_face);
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace dessin
