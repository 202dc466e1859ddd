#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dessin/errors.hpp"
#include "dessin/oracle.hpp"
#include "dessin/reroute.hpp"
#include "helpers.hpp"

using namespace dessin;
using testing_helpers::L;
using testing_helpers::pair_of;
using testing_helpers::perm;

namespace {

using Map = std::map<ElementLabel, ElementLabel>;

Map mapping(const Permutation& p) {
  Map m;
  for (const auto& x : p.ground().elements()) m[x] = p(x);
  return m;
}

// Cycle-list rewrite of the definition, kept apart from the library code.
std::pair<Map, Map> reroute_by_cycles(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  const ElementLabel aw = a.white(), ab = a.black();
  Map w, k;
  for (auto cycle : pair.white().cycles()) {
    Cycle out;
    for (const auto& x : cycle) {
      if (x == b) out.push_back(ab);
      out.push_back(x == a ? aw : x);
    }
    for (std::size_t i = 0; i < out.size(); ++i) w[out[i]] = out[(i + 1) % out.size()];
  }
  for (auto cycle : pair.black().cycles()) {
    for (auto& x : cycle) {
      if (x == a) x = ab;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) k[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  k[aw] = aw;
  return {w, k};
}

// One-step form of the double reroute.
std::pair<Map, Map> double_by_cycles(const PermutationPair& pair, const ElementLabel& a, const ElementLabel& b) {
  const ElementLabel aw = a.white(), ab = a.black(), bw = b.white(), bb = b.black();
  Map w, k;
  for (const auto& cycle : pair.white().cycles()) {
    Cycle out;
    for (const auto& x : cycle) {
      if (x == b) out.push_back(ab);
      if (x == a) out.push_back(bb);
      out.push_back(x == a ? aw : x == b ? bw : x);
    }
    for (std::size_t i = 0; i < out.size(); ++i) w[out[i]] = out[(i + 1) % out.size()];
  }
  for (auto cycle : pair.black().cycles()) {
    for (auto& x : cycle) x = x == a ? ab : x == b ? bb : x;
    for (std::size_t i = 0; i < cycle.size(); ++i) k[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  k[aw] = aw;
  k[bw] = bw;
  return {w, k};
}

template <typename F>
void for_each_tuple(std::uint32_t n, F&& f) {
  auto all = all_permutations(n);
  for (const auto& w : all) {
    for (const auto& b : all) {
      PermutationPair p(w, b);
      for (const auto& x : p.ground().elements()) {
        for (const auto& y : p.ground().elements()) {
          if (x != y) f(p, x, y);
        }
      }
    }
  }
}

}  // namespace

TEST(Reroute, WorkedExample) {
  auto r = reroute(pair_of("(1,2)(3)", "(1)(2,3)"), L("1"), L("3"));
  EXPECT_EQ(r.pair.white().to_string(), "(1W,2)(1B,3)");
  EXPECT_EQ(r.pair.black().to_string(), "(1W)(1B)(2,3)");
  EXPECT_EQ(r.a_white, L("1W"));
  EXPECT_EQ(r.a_black, L("1B"));
  EXPECT_EQ(r.pair.product().to_string(), "(1W,2,1B,3)");
  EXPECT_EQ(euler_characteristic(r.pair), 2);
  EXPECT_EQ(synthetic_genus(r.pair), 0);
}

TEST(Reroute, FixedAStaysFixed) {
  auto r = reroute(pair_of("(1)(2,3)", "(1,2,3)"), L("1"), L("2"));
  EXPECT_EQ(r.pair.white()(L("1W")), L("1W"));
  EXPECT_EQ(r.pair.white().to_string(), "(1W)(1B,2,3)");
}

TEST(Reroute, RejectsEqualElements) {
  auto p = pair_of("(1,2)", "(1,2)");
  EXPECT_THROW(reroute(p, L("1"), L("1")), DomainError);
  EXPECT_THROW(double_reroute(p, L("2"), L("2")), DomainError);
  EXPECT_THROW(conjugate_by_transposition(p, L("1"), L("1")), DomainError);
  EXPECT_THROW(predict_branch_type(p, L("1"), L("1")), DomainError);
}

TEST(Reroute, DerivedLabelsRerouteAgain) {
  auto r = reroute(pair_of("(1,2)(3)", "(1)(2,3)"), L("1"), L("3"));
  auto s = reroute(r.pair, L("1W"), L("1B"));
  EXPECT_EQ(s.a_white, L("1WW"));
  EXPECT_EQ(s.pair.size(), 5u);
}

TEST(Reroute, MatchesCycleRewriteOverS4) {
  for_each_tuple(4, [](const PermutationPair& p, const ElementLabel& a, const ElementLabel& b) {
    auto r = reroute(p, a, b);
    auto [w, k] = reroute_by_cycles(p, a, b);
    ASSERT_EQ(mapping(r.pair.white()), w);
    ASSERT_EQ(mapping(r.pair.black()), k);
  });
}

// The seven clauses of the alternate description.
TEST(Reroute, ClausesOverS4) {
  for_each_tuple(4, [](const PermutationPair& p, const ElementLabel& a, const ElementLabel& b) {
    auto r = reroute(p, a, b);
    const Permutation &w = p.white(), &k = p.black();
    const Permutation &w2 = r.pair.white(), &k2 = r.pair.black();
    const ElementLabel aw = r.a_white, ab = r.a_black;
    // op1
    if (w(a) == a) {
      ASSERT_EQ(w2(aw), aw);
    } else {
      for (const auto& x : p.ground().elements()) {
        if (x != a && w(x) == a) ASSERT_EQ(w2(x), aw);
      }
      if (w(a) != b) ASSERT_EQ(w2(aw), w(a));
    }
    // op2
    if (w(a) == b) {
      ASSERT_EQ(w2(aw), ab);
    } else {
      for (const auto& x : p.ground().elements()) {
        if (x != a && w(x) == b) ASSERT_EQ(w2(x), ab);
      }
    }
    // op3
    ASSERT_EQ(w2(ab), b);
    // op4
    for (const auto& x : p.ground().elements()) {
      if (x != a && w(x) != a && w(x) != b) ASSERT_EQ(w2(x), w(x));
    }
    // op5
    ASSERT_EQ(k2(aw), aw);
    // op6
    if (k(a) == a) {
      ASSERT_EQ(k2(ab), ab);
    } else {
      for (const auto& x : p.ground().elements()) {
        if (x != a && k(x) == a) ASSERT_EQ(k2(x), ab);
      }
      ASSERT_EQ(k2(ab), k(a));
    }
    // op7
    for (const auto& x : p.ground().elements()) {
      if (x != a && k(x) != a) ASSERT_EQ(k2(x), k(x));
    }
  });
}

TEST(Reroute, GenusFollowsTypeOverS4) {
  for_each_tuple(4, [](const PermutationPair& p, const ElementLabel& a, const ElementLabel& b) {
    const int g = synthetic_genus(p);
    const int g2 = synthetic_genus(reroute(p, a, b).pair);
    switch (classify_type(p, a, b)) {
      case TypeClass::U: ASSERT_EQ(g2, g + 1); break;
      case TypeClass::N: ASSERT_EQ(g2, g - 1); break;
      default: ASSERT_EQ(g2, g);
    }
    ASSERT_EQ(reroute(p, a, b).pair.black().num_cycles(), p.black().num_cycles() + 1);
  });
}

TEST(DoubleReroute, WorkedExample) {
  auto p = pair_of("(1,2)(3)", "(1)(2,3)");
  auto d = double_reroute(p, L("1"), L("3"));
  EXPECT_EQ(d.white().to_string(), "(1W,2,3B)(1B,3W)");
  EXPECT_EQ(d.black().to_string(), "(1W)(1B)(2,3B)(3W)");
  EXPECT_FALSE(is_transitive(d));
  EXPECT_FALSE(is_transitive(conjugate_by_transposition(p, L("1"), L("3"))));
  EXPECT_EQ(conjugate_by_transposition(p, L("1"), L("3")).white(), p.black());
}

TEST(DoubleReroute, OneStepFormAndBookkeepingOverS4) {
  for_each_tuple(4, [](const PermutationPair& p, const ElementLabel& a, const ElementLabel& b) {
    auto d = double_reroute(p, a, b);
    auto [w, k] = double_by_cycles(p, a, b);
    ASSERT_EQ(mapping(d.white()), w);
    ASSERT_EQ(mapping(d.black()), k);
    ASSERT_EQ(d.size(), p.size() + 2);
    ASSERT_EQ(d.black().num_cycles(), p.black().num_cycles() + 2);
  });
}

TEST(ConjugateByTransposition, Examples) {
  auto torus = pair_of("(1,2,3)(4)", "(1,2,4,3)");
  auto t = conjugate_by_transposition(torus, L("1"), L("4"));
  EXPECT_TRUE(is_transitive(t));
  EXPECT_EQ(synthetic_genus(torus), 1);
  EXPECT_EQ(synthetic_genus(t), 0);
  auto s8 = pair_of("(1,2,3)(4,5,6)(7,8)", "(1,7,5)(2,6,4)(3,8)");
  EXPECT_FALSE(is_transitive(conjugate_by_transposition(s8, L("3"), L("7"))));
  EXPECT_TRUE(is_transitive(conjugate_by_transposition(s8, L("1"), L("8"))));
}

TEST(ConjugateByTransposition, MatchesDoubleRerouteOverS4) {
  for_each_tuple(4, [](const PermutationPair& p, const ElementLabel& a, const ElementLabel& b) {
    auto c = conjugate_by_transposition(p, a, b);
    ASSERT_EQ(c.white(), conjugate(p.white(), transposition(p.ground_ptr(), a, b)));
    ASSERT_EQ(c.black(), p.black());
    auto d = double_reroute(p, a, b);
    ASSERT_EQ(is_transitive(c), is_transitive(d));
    ASSERT_EQ(synthetic_genus(c), synthetic_genus(d));
    ASSERT_EQ(c.product().num_cycles(), d.product().num_cycles());
  });
}

TEST(PredictBranch, Examples) {
  EXPECT_EQ(predict_branch_type(pair_of("(1,2)(3)", "(1)(2,3)"), L("1"), L("3")), TypeClass::N);
  EXPECT_EQ(predict_branch_type(pair_of("(1,2,3)", "(1,3,2)"), L("1"), L("3")), TypeClass::P1);
  EXPECT_EQ(predict_branch_type(pair_of("(1,2)(3,4)", "(1)(2)(3)(4)"), L("1"), L("3")), TypeClass::P2);
}

TEST(PredictBranch, MatchesRerouteOverS4) {
  std::set<std::size_t> rows;
  for_each_tuple(4, [&](const PermutationPair& p, const ElementLabel& a, const ElementLabel& b) {
    BranchPrediction pred = predict_branch(p, a, b);
    auto r = reroute(p, a, b);
    ASSERT_EQ(pred.predicted, classify_type(r.pair, b, r.a_white)) << format_pair(p) << a.to_string() << b.to_string();
    const BranchRow& row = branch_table()[pred.row];
    ASSERT_EQ(row.source, classify_type(p, a, b));
    ASSERT_EQ(row.predicted, pred.predicted);
    int matching = 0;
    const ElementLabel wb = p.white()(b);
    const bool degenerate = wb == a || wb == b;
    for (const auto& other : branch_table()) {
      // Rows are read within the source type; the degenerate rows come first.
      if (other.source != row.source || (other.test == RowTest::Equals) != degenerate) continue;
      matching += branch_row_matches(p, p.index_of(a), p.index_of(b), other);
    }
    ASSERT_EQ(matching, 1);
    rows.insert(pred.row);
  });
  EXPECT_GT(rows.size(), branch_table().size() / 2);
}

TEST(BranchTable, Shape) {
  auto table = branch_table();
  EXPECT_EQ(table.size(), 36u);
  std::map<TypeClass, int> per_source;
  std::set<std::string_view> ids;
  for (const auto& row : table) {
    per_source[row.source]++;
    EXPECT_TRUE(ids.insert(row.id).second) << row.id;
    EXPECT_FALSE(row.rule.empty());
  }
  EXPECT_EQ(per_source.size(), 6u);
}
