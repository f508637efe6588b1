#include "guideme/selection.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "guideme/error.hpp"

namespace guideme {
namespace {

TEST(SelectPlace, EmptyInput) {
  EXPECT_EQ(select_place({}), (Selection{std::nullopt, {}}));
}

TEST(SelectPlace, OnlyOneAboveAcceptance) {
  const std::vector<LabelScore> in = {{"Kaaba", 0.95}, {"Zamzam", 0.60}};
  const auto s = select_place(in);
  EXPECT_EQ(s.top, "Kaaba");
  EXPECT_EQ(s.ranked, (std::vector<LabelScore>{{"Kaaba", 0.95}}));
}

TEST(SelectPlace, AllBelowAcceptance) {
  const std::vector<LabelScore> in = {{"Kaaba", 0.79}, {"Zamzam", 0.75}};
  const auto s = select_place(in);
  EXPECT_FALSE(s.top);
  EXPECT_TRUE(s.ranked.empty());
}

TEST(SelectPlace, AcceptanceBoundaryIsInclusive) {
  const std::vector<LabelScore> in = {{"Kaaba", 0.80}};
  EXPECT_EQ(select_place(in).top, "Kaaba");
}

// A running-max scan seeded with the first entry and requiring strict
// improvement never assigns a result for this input.
TEST(SelectPlace, FirstEntryIsSelectable) {
  const std::vector<LabelScore> in = {{"A", 0.9}};
  EXPECT_EQ(select_place(in).top, "A");
  const std::vector<LabelScore> first_is_max = {{"A", 0.95}, {"B", 0.85}};
  EXPECT_EQ(select_place(first_is_max, {0.5, 0.8}).top, "A");
}

TEST(SelectPlace, RankedDescendingWithLabelTieBreak) {
  const std::vector<LabelScore> in = {{"b", 0.9}, {"c", 0.95}, {"a", 0.9}, {"d", 0.3}};
  const auto s = select_place(in, {0.5, 0.85});
  EXPECT_EQ(s.ranked, (std::vector<LabelScore>{{"c", 0.95}, {"a", 0.9}, {"b", 0.9}}));
  EXPECT_EQ(s.top, "c");
}

TEST(SelectPlace, RejectsOutOfRangeConfidence) {
  const std::vector<LabelScore> in = {{"x", 1.5}};
  EXPECT_THROW(select_place(in), Error);
}

TEST(SelectionPolicy, Validation) {
  EXPECT_NO_THROW(SelectionPolicy{}.validate());
  EXPECT_THROW((SelectionPolicy{0.9, 0.8}.validate()), Error);
  EXPECT_THROW((SelectionPolicy{-0.1, 0.8}.validate()), Error);
  EXPECT_THROW((SelectionPolicy{0.5, 1.1}.validate()), Error);
}

std::vector<LabelScore> random_scores(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> conf(0.0, 1.0);
  std::vector<LabelScore> out;
  for (int i = 0; i < n; ++i) out.push_back({"L" + std::to_string(rng() % 6), conf(rng)});
  return out;
}

TEST(SelectPlace, BelowFloorEntriesNeverChangeResult) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> low(0.0, 0.5);
  for (int i = 0; i < 500; ++i) {
    auto scores = random_scores(rng, int(rng() % 6));
    const auto before = select_place(scores);
    scores.insert(scores.begin() + (scores.empty() ? 0 : rng() % scores.size()),
                  {"extra", std::nextafter(low(rng), 0.0)});
    EXPECT_EQ(select_place(scores), before);
  }
}

TEST(SelectPlace, TopIsArgmaxOfRanked) {
  std::mt19937 rng(43);
  for (int i = 0; i < 500; ++i) {
    const auto scores = random_scores(rng, 1 + int(rng() % 6));
    const auto s = select_place(scores);
    if (!s.top) {
      for (const auto& x : scores) EXPECT_LT(x.confidence, 0.8);
      continue;
    }
    for (const auto& r : s.ranked) {
      EXPECT_GE(r.confidence, 0.8);
      EXPECT_GE(s.ranked.front().confidence, r.confidence);
      if (r.confidence == s.ranked.front().confidence) {
        EXPECT_LE(*s.top, r.label);
      }
    }
    EXPECT_EQ(*s.top, s.ranked.front().label);
  }
}

}  // namespace
}  // namespace guideme
