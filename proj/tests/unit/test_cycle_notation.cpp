#include <gtest/gtest.h>

#include "dessin/cycle_notation.hpp"
#include "dessin/errors.hpp"
#include "dessin/oracle.hpp"
#include "helpers.hpp"

using namespace dessin;
using testing_helpers::L;
using testing_helpers::labels;

TEST(CycleNotation, ParsesGroups) {
  auto groups = parse_cycle_groups("(1,2,3)(4)");
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0], labels({"1", "2", "3"}));
  EXPECT_EQ(groups[1], labels({"4"}));
}

TEST(CycleNotation, WhitespaceAndOptionalCommas) {
  EXPECT_EQ(parse_permutation(" ( 1 , 2 ,3 )\n( 4 5 )\t"), parse_permutation("(1,2,3)(4,5)"));
  EXPECT_EQ(parse_permutation("(1 2 3)"), parse_permutation("(1,2,3)"));
}

TEST(CycleNotation, DerivedLabels) {
  Permutation p = parse_permutation("(1W,2)(1B,3)");
  EXPECT_EQ(p.ground().size(), 4u);
  EXPECT_EQ(p(L("1W")), L("2"));
  EXPECT_EQ(p.to_string(), "(1W,2)(1B,3)");
}

TEST(CycleNotation, DegreeInference) {
  EXPECT_EQ(parse_permutation("(1,2)").size(), 2u);
  Permutation p = parse_permutation("(1,2)", 4);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.to_string(), "(1,2)(3)(4)");
  // A base with a mentioned descendant is not added.
  EXPECT_EQ(parse_permutation("(2,1W)", 3).ground().elements(), labels({"1W", "2", "3"}));
}

TEST(CycleNotation, ErrorsCarryLineAndColumn) {
  struct Case {
    const char* text;
    int line;
    int column;
  };
  const Case cases[] = {
      {"", 1, 1},          // nothing
      {"()", 1, 2},        // empty group
      {"(1,,2)", 1, 4},    // stray comma
      {"(,1)", 1, 2},      // leading comma
      {"(1,2,)", 1, 6},    // trailing comma
      {"1,2)", 1, 1},      // missing '('
      {"(1,2", 1, 5},      // unterminated
      {"(1,2)(2,3)", 1, 7},  // repeated element
      {"(1,2)\n(3,x)", 2, 4},
      {"(0)", 1, 2},
  };
  for (const auto& c : cases) {
    try {
      parse_cycle_groups(c.text);
      ADD_FAILURE() << "no error for '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << ": " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << ": " << e.what();
    }
  }
}

TEST(CycleNotation, ElementAboveDegreeIsAnError) {
  EXPECT_THROW(parse_permutation("(1,5)", 4), ParseError);
  try {
    parse_permutation("(1, 5)", 4);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5);
    EXPECT_NE(std::string(e.what()).find("exceeds degree"), std::string::npos);
  }
}

TEST(CycleNotation, FormatRoundTripOverS4) {
  for (const auto& p : all_permutations(4)) {
    std::string text = format_permutation(p);
    ASSERT_EQ(parse_permutation(text), p) << text;
    ASSERT_EQ(format_permutation(parse_permutation(text)), text);
  }
}
