#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "dessin/errors.hpp"
#include "dessin/oracle.hpp"
#include "dessin/pair.hpp"
#include "dessin/reroute.hpp"
#include "helpers.hpp"

using namespace dessin;
using testing_helpers::Brute;
using testing_helpers::L;
using testing_helpers::labels;
using testing_helpers::pair_of;
using testing_helpers::perm;

TEST(PermutationPair, ProductIsWhiteAfterBlack) {
  auto p = pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)");
  EXPECT_EQ(p.product(), perm("(1,5,4,3,2)"));
  EXPECT_EQ(p.product(), compose(p.white(), p.black()));
}

TEST(PermutationPair, RejectsMismatchedGrounds) {
  EXPECT_THROW(PermutationPair(perm("(1,2)"), perm("(1,2,3)")), StructuralError);
}

TEST(EulerCharacteristic, Examples) {
  auto disconnected = pair_of("(1,2,3)(4)", "(1,2,3)(4)");
  EXPECT_EQ(euler_characteristic(disconnected), 2);  // (2 + 2) - 4 + 2
  EXPECT_EQ(synthetic_genus(disconnected), 0);
  auto one = pair_of("(1)", "(1)");
  EXPECT_EQ(euler_characteristic(one), 2);
  EXPECT_EQ(synthetic_genus(one), 0);
  auto s5 = pair_of("(1,2,3,4,5)", "(1,5,3,2,4)");
  EXPECT_EQ(euler_characteristic(s5), 0);  // (1 + 1) - 5 + 3
  EXPECT_EQ(synthetic_genus(s5), 1);
  EXPECT_TRUE(is_transitive(s5));
}

TEST(Analyze, ReportFields) {
  PairReport r = analyze(pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)"));
  EXPECT_EQ(r.chi, 0);
  EXPECT_EQ(r.genus, 1);
  EXPECT_EQ(r.nu_white, 2u);
  EXPECT_EQ(r.nu_black, 2u);
  EXPECT_EQ(r.nu_product, 1u);
  EXPECT_TRUE(r.transitive);
  EXPECT_EQ(r.to_text(), "chi: 0\ngenus: 1\nnu_white: 2\nnu_black: 2\nnu_product: 1\ntransitive: true\n");
  EXPECT_EQ(r.to_json(),
            R"({"chi":0,"genus":1,"nu_white":2,"nu_black":2,"nu_product":1,"transitive":true})");
  PairReport torus = analyze(pair_of("(1,2,3)(4)", "(1,2,4,3)"));
  EXPECT_EQ(torus.chi, 0);
  EXPECT_EQ(torus.genus, 1);
}

TEST(ClassifyType, Examples) {
  EXPECT_EQ(classify_type(pair_of("(1,2)(3)", "(1)(2,3)"), L("1"), L("3")), TypeClass::P1);
  EXPECT_EQ(classify_type(pair_of("(1,2,3)", "(1,3,2)"), L("1"), L("3")), TypeClass::U);
  auto s8 = pair_of("(1,2,3)(4,5,6)(7,8)", "(1,7,5)(2,6,4)(3,8)");
  EXPECT_EQ(s8.product(), perm("(1,8)(2,4,3,7,6,5)"));
  EXPECT_EQ(classify_type(s8, L("1"), L("8")), TypeClass::P3);
  EXPECT_EQ(classify_type(s8, L("3"), L("7")), TypeClass::P3);
  EXPECT_THROW(classify_type(s8, L("1"), L("1")), DomainError);
}

TEST(ClassifyType, DegenerateCases) {
  // white(a) = a with b in a's orbit: N.
  auto fixed = pair_of("(1)(2,3)", "(1,2)(3)");
  ASSERT_TRUE(same_orbit(fixed.product(), L("1"), L("2")));
  EXPECT_EQ(classify_type(fixed, L("1"), L("2")), TypeClass::N);
  // white(a) = b: P1.
  auto to_b = pair_of("(1,2)(3)", "(1)(2,3)");
  EXPECT_EQ(classify_type(to_b, L("1"), L("2")), TypeClass::P1);
}

TEST(ClassifyType, ExactlyOneClassOverS4) {
  auto all = all_permutations(4);
  for (const auto& w : all) {
    for (const auto& b : all) {
      PermutationPair p(w, b);
      const Permutation& g = p.product();
      for (const auto& x : p.ground().elements()) {
        for (const auto& y : p.ground().elements()) {
          if (x == y) continue;
          const ElementLabel wx = p.white()(x);
          const bool a_wa = same_orbit(g, x, wx), a_b = same_orbit(g, x, y), wa_b = same_orbit(g, wx, y);
          // The six definitions, independently.
          const bool all3 = a_wa && a_b;
          const bool in_arc = all3 && arc_contains(g, x, y, wx);
          const std::map<TypeClass, bool> holds{{TypeClass::U, !a_wa && !a_b && !wa_b},
                                                {TypeClass::N, all3 && !in_arc},
                                                {TypeClass::P1, in_arc},
                                                {TypeClass::P2, a_wa && !a_b},
                                                {TypeClass::P3, a_b && !a_wa},
                                                {TypeClass::P4, wa_b && !a_b}};
          int count = 0;
          for (const auto& [t, h] : holds) count += h;
          ASSERT_EQ(count, 1);
          ASSERT_TRUE(holds.at(classify_type(p, x, y)));
        }
      }
    }
  }
}

TEST(ClassifyExceptional, Examples) {
  auto lin = pair_of("(1,2)(3)", "(1)(2,3)");
  EXPECT_EQ(classify_exceptional(lin, L("1"), L("3")), ExceptionalClass::Tame1B);
  EXPECT_EQ(classify_exceptional(lin, L("3"), L("1")), ExceptionalClass::Tame1A);
  auto s8 = pair_of("(1,2,3)(4,5,6)(7,8)", "(1,7,5)(2,6,4)(3,8)");
  EXPECT_EQ(classify_exceptional(s8, L("1"), L("8")), ExceptionalClass::Tame2);
  EXPECT_EQ(classify_exceptional(s8, L("3"), L("7")), ExceptionalClass::Tame2);
  auto wild = pair_of("(1,2)(3,4)", "(1)(2)(3)(4)");
  EXPECT_EQ(classify_type(wild, L("1"), L("3")), TypeClass::P2);
  EXPECT_EQ(classify_type(wild, L("3"), L("1")), TypeClass::P2);
  EXPECT_EQ(classify_exceptional(wild, L("1"), L("3")), ExceptionalClass::Wild);
  EXPECT_EQ(classify_exceptional(pair_of("(1,2,3)", "(1,3,2)"), L("1"), L("3")), ExceptionalClass::None);
  EXPECT_EQ(classify_exceptional(pair_of("(1,2,3)(4)", "(1,2,4,3)"), L("1"), L("4")), ExceptionalClass::Tame1B);
  EXPECT_EQ(classify_exceptional(pair_of("(1,2)(3,4)", "(1,4)(2,3)"), L("1"), L("3")), ExceptionalClass::Tame2);
}

// Tame 1 read off the cycle picture: a, white(a), b, white(b) in one product
// cycle, ordered ( .. white(a) .. white(b) .. b .. a .. ) for 1B.
TEST(ClassifyExceptional, MatchesCyclePicturesOverS4) {
  auto all = all_permutations(4);
  for (const auto& w : all) {
    for (const auto& b : all) {
      PermutationPair p(w, b);
      const Permutation& g = p.product();
      for (const auto& x : p.ground().elements()) {
        for (const auto& y : p.ground().elements()) {
          if (x == y) continue;
          const ElementLabel wx = p.white()(x), wy = p.white()(y);
          auto pos = [&](const ElementLabel& from, const ElementLabel& z) {
            return minimal_sequence(g, from, z).size() - 1;
          };
          const bool one_cycle = same_orbit(g, x, y) && same_orbit(g, x, wx) && same_orbit(g, x, wy);
          // Positions measured from a; white(a) != a, and white(b) may equal b.
          const bool t1b = one_cycle && wx != x && pos(x, wx) < pos(x, wy) && pos(x, wy) <= pos(x, y) &&
                           pos(x, wy) > 0;
          const bool t1a = one_cycle && wy != y && pos(y, wy) < pos(y, wx) && pos(y, wx) <= pos(y, x) &&
                           pos(y, wx) > 0;
          const bool t2 = same_orbit(g, x, y) && same_orbit(g, wx, wy) && !same_orbit(g, x, wx);
          const bool wild = same_orbit(g, x, wx) && same_orbit(g, y, wy) && !same_orbit(g, x, y);
          ExceptionalClass got = classify_exceptional(p, x, y);
          ASSERT_EQ(got == ExceptionalClass::Tame1B, t1b) << format_pair(p) << x.to_string() << y.to_string();
          ASSERT_EQ(got == ExceptionalClass::Tame1A, t1a) << format_pair(p) << x.to_string() << y.to_string();
          ASSERT_EQ(got == ExceptionalClass::Tame2, t2);
          ASSERT_EQ(got == ExceptionalClass::Wild, wild);
        }
      }
    }
  }
}

TEST(ClassifyExceptional, SymmetryOverS4) {
  auto all = all_permutations(4);
  for (const auto& w : all) {
    for (const auto& b : all) {
      PermutationPair p(w, b);
      for (const auto& x : p.ground().elements()) {
        for (const auto& y : p.ground().elements()) {
          if (x == y) continue;
          ExceptionalClass ab = classify_exceptional(p, x, y);
          ExceptionalClass ba = classify_exceptional(p, y, x);
          ASSERT_EQ(ab == ExceptionalClass::Tame1A, ba == ExceptionalClass::Tame1B);
          ASSERT_EQ(ab == ExceptionalClass::Wild, ba == ExceptionalClass::Wild);
          ASSERT_EQ(ab == ExceptionalClass::Tame2, ba == ExceptionalClass::Tame2);
          if (ab == ExceptionalClass::Wild) {
            ASSERT_EQ(classify_type(p, x, y), TypeClass::P2);
            ASSERT_EQ(classify_type(p, y, x), TypeClass::P2);
          }
        }
      }
    }
  }
}

TEST(GenusEffect, Examples) {
  EXPECT_EQ(genus_effect(pair_of("(1,2,3)", "(1,3,2)"), L("1"), L("3")), GenusEffect::Raising);
  EXPECT_EQ(genus_effect(pair_of("(1,2)(3)", "(1)(2,3)"), L("1"), L("3")), GenusEffect::Lowering);
  EXPECT_EQ(genus_effect(pair_of("(1,2,3)(4)", "(1,2,3)(4)"), L("1"), L("4")), GenusEffect::Preserving);
  EXPECT_THROW(genus_effect(pair_of("(1,2)", "(1,2)"), L("2"), L("2")), DomainError);
}

TEST(GenusEffect, MatchesDirectConjugationOverS4) {
  auto all = all_permutations(4);
  for (const auto& w : all) {
    for (const auto& b : all) {
      PermutationPair p(w, b);
      const int g = synthetic_genus(p);
      for (const auto& x : p.ground().elements()) {
        for (const auto& y : p.ground().elements()) {
          if (x == y) continue;
          PermutationPair t(conjugate(w, transposition(p.ground_ptr(), x, y)), b);
          const int dg = synthetic_genus(t) - g;
          ASSERT_LE(std::abs(dg), 1);
          const GenusEffect want = dg > 0 ? GenusEffect::Raising : dg < 0 ? GenusEffect::Lowering : GenusEffect::Preserving;
          ASSERT_EQ(genus_effect(p, x, y), want) << format_pair(p) << x.to_string() << " " << y.to_string();
        }
      }
    }
  }
}

TEST(EulerCharacteristic, EvenOverS4) {
  auto all = all_permutations(4);
  for (const auto& w : all) {
    for (const auto& b : all) ASSERT_EQ(euler_characteristic(PermutationPair(w, b)) % 2, 0);
  }
}

TEST(EulerCharacteristic, MatchesIndependentCount) {
  // Brute-force model of the same formula on raw image arrays.
  Brute w = Brute::from_cycles(5, {{1, 2, 5, 3}});
  Brute b = Brute::from_cycles(5, {{1, 2, 3}, {4, 5}});
  EXPECT_EQ(testing_helpers::brute_chi(w, b), 0);
  EXPECT_EQ(euler_characteristic(pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)")), testing_helpers::brute_chi(w, b));
}

TEST(GroupOrbits, AdditivityOnDisconnectedExample) {
  auto p = pair_of("(1,2,3)(4)", "(1,2,3)(4)");
  auto orbits = group_orbits(p);
  ASSERT_EQ(orbits.size(), 2u);
  EXPECT_EQ(orbits[0], labels({"1", "2", "3"}));
  EXPECT_EQ(orbits[1], labels({"4"}));
  EXPECT_EQ(num_group_orbits(p), 2u);
  EXPECT_FALSE(is_transitive(p));
  PermutationPair left = restrict_pair(p, orbits[0]);
  PermutationPair right = restrict_pair(p, orbits[1]);
  const int g1 = synthetic_genus(left), g2 = synthetic_genus(right);
  EXPECT_EQ(g1 + g2, synthetic_genus(p) + 1);
  EXPECT_EQ(euler_characteristic(left) + euler_characteristic(right), euler_characteristic(p));
  EXPECT_THROW(restrict_pair(p, labels({"1", "2"})), DomainError);
}

TEST(FacesOfEdge, Examples) {
  EXPECT_EQ(faces_of_edge(pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)"), L("1")).size(), 1u);
  EXPECT_EQ(faces_of_edge(pair_of("(1)(2)", "(1,2)"), L("1")).size(), 1u);
  auto circuit = pair_of("(1,2)(3,4)", "(1,4)(2,3)");
  auto faces = faces_of_edge(circuit, L("1"));
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0], labels({"1", "3"}));
  EXPECT_EQ(faces[1], labels({"2", "4"}));
}

TEST(DeleteEdge, Examples) {
  auto p = pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)");
  auto cut5 = delete_edge(p, L("5"));
  EXPECT_EQ(cut5.white().to_string(), "(1,2,3)(4)");
  EXPECT_EQ(cut5.black().to_string(), "(1,2,3)(4)");
  EXPECT_EQ(euler_characteristic(p), 0);
  EXPECT_EQ(euler_characteristic(cut5), 2);
  EXPECT_FALSE(is_transitive(cut5));
  for (const char* e : {"1", "2", "3"}) {
    auto cut = delete_edge(p, L(e));
    EXPECT_TRUE(is_transitive(cut)) << e;
    EXPECT_EQ(euler_characteristic(cut), 2) << e;
  }
  auto small = delete_edge(pair_of("(1,2)", "(1)(2)"), L("2"));
  EXPECT_TRUE(small.white().is_identity());
  EXPECT_TRUE(small.black().is_identity());
  EXPECT_EQ(small.size(), 1u);
  EXPECT_EQ(euler_characteristic(small), 2);
  EXPECT_THROW(delete_edge(pair_of("(1)", "(1)"), L("1")), DegenerateError);
}

TEST(DeleteEdge, ChiDeltaForGenericEdgesOverS4) {
  auto all = all_permutations(4);
  int one_face = 0, two_face = 0;
  for (const auto& w : all) {
    for (const auto& b : all) {
      PermutationPair p(w, b);
      for (const auto& e : p.ground().elements()) {
        if (w(e) == e || b(e) == e) continue;
        const bool single = faces_of_edge(p, e).size() == 1;
        (single ? one_face : two_face)++;
        ASSERT_EQ(euler_characteristic(delete_edge(p, e)), euler_characteristic(p) + (single ? 2 : 0));
      }
    }
  }
  EXPECT_GT(one_face, 0);
  EXPECT_GT(two_face, 0);
}

TEST(BoundaryWalk, Examples) {
  auto p = pair_of("(1,2,3)(4)", "(1,2,3)(4)");
  EXPECT_EQ(boundary_walk(p, L("1")), labels({"1", "2", "3", "1", "2", "3"}));
  EXPECT_EQ(boundary_walk(pair_of("(1)", "(1)"), L("1")), labels({"1", "1"}));
  auto q = pair_of("(1,2,5,3)(4)", "(1,2,3)(4,5)");
  auto walk = boundary_walk(q, L("1"));
  ASSERT_EQ(walk.size(), 10u);
  for (const char* e : {"1", "2", "3", "4", "5"}) EXPECT_EQ(std::count(walk.begin(), walk.end(), L(e)), 2) << e;
}

TEST(FormatPair, Text) {
  EXPECT_EQ(format_pair(pair_of("(1,2)", "(2)", 3)), "white: (1,2)(3)\nblack: (1)(2)(3)\n");
}
