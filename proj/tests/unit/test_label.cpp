#include <gtest/gtest.h>

#include "dessin/errors.hpp"
#include "dessin/label.hpp"

using namespace dessin;

TEST(ElementLabel, ParseAndPrint) {
  for (const char* text : {"1", "12", "3W", "3B", "3WB", "10BBW"}) {
    EXPECT_EQ(ElementLabel::parse(text).to_string(), text);
  }
}

TEST(ElementLabel, RejectsMalformedText) {
  for (const char* text : {"", "0", "W", "3X", "-1", "3 W", "99999999999"}) {
    EXPECT_THROW(ElementLabel::parse(text), DomainError) << text;
  }
}

TEST(ElementLabel, OrderPutsParentBeforeChildrenAndWhiteBeforeBlack) {
  auto l = [](const char* s) { return ElementLabel::parse(s); };
  EXPECT_LT(l("3"), l("3W"));
  EXPECT_LT(l("3W"), l("3WW"));
  EXPECT_LT(l("3WW"), l("3WB"));
  EXPECT_LT(l("3WB"), l("3B"));
  EXPECT_LT(l("3B"), l("3BW"));
  EXPECT_LT(l("3BB"), l("4"));
  EXPECT_LT(l("9"), l("10"));
}

TEST(ElementLabel, Structure) {
  ElementLabel x = ElementLabel::base(5).white().black();
  EXPECT_EQ(x.to_string(), "5WB");
  EXPECT_EQ(x.depth(), 2);
  EXPECT_EQ(x.base_index(), 5u);
  EXPECT_EQ(x.tag(0), Color::White);
  EXPECT_EQ(x.tag(1), Color::Black);
  EXPECT_EQ(x.parent().to_string(), "5W");
  EXPECT_TRUE(x.descends_from(ElementLabel::base(5)));
  EXPECT_TRUE(x.descends_from(x));
  EXPECT_FALSE(x.descends_from(ElementLabel::parse("5B")));
  EXPECT_FALSE(ElementLabel::base(5).descends_from(x));
  EXPECT_TRUE(ElementLabel::base(5).is_base());
  EXPECT_FALSE(x.is_base());
  EXPECT_EQ(ElementLabel::parse("5W"), ElementLabel::base(5).white());
}

TEST(ElementLabel, DepthLimit) {
  ElementLabel x = ElementLabel::base(1);
  for (int i = 0; i < ElementLabel::kMaxDepth; ++i) x = x.black();
  EXPECT_EQ(x.depth(), ElementLabel::kMaxDepth);
  EXPECT_THROW(x.white(), DomainError);
}

TEST(GroundSet, SortsAndIndexes) {
  GroundSet g({ElementLabel::parse("4"), ElementLabel::parse("1W"), ElementLabel::parse("2"),
               ElementLabel::parse("1B")});
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[0].to_string(), "1W");
  EXPECT_EQ(g[1].to_string(), "1B");
  EXPECT_EQ(g[3].to_string(), "4");
  EXPECT_EQ(g.index_of(ElementLabel::parse("2")), 2u);
  EXPECT_FALSE(g.contains(ElementLabel::parse("1")));
  EXPECT_THROW(g.index_of(ElementLabel::parse("3")), DomainError);
}

TEST(GroundSet, Range) {
  auto g = GroundSet::range(5);
  EXPECT_EQ(g->size(), 5u);
  for (std::uint32_t i = 1; i <= 5; ++i) EXPECT_EQ(g->index_of(ElementLabel::base(i)), i - 1);
  EXPECT_FALSE(g->contains(ElementLabel::base(6)));
  EXPECT_FALSE(g->contains(ElementLabel::parse("1W")));
}

TEST(GroundSet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(GroundSet({}), DomainError);
  EXPECT_THROW(GroundSet({ElementLabel::base(1), ElementLabel::base(1)}), DomainError);
}
