#include <gtest/gtest.h>

#include "lusztig/error.hpp"
#include "lusztig/spanning.hpp"
#include "lusztig/wiring.hpp"

using namespace lusztig;

namespace {

std::vector<PositiveRoot> support(const RootVector& v) {
  std::vector<PositiveRoot> out;
  for (const auto& r : all_positive_roots(v.n()))
    if (v[r] != 0) out.push_back(r);
  return out;
}

using Roots = std::vector<PositiveRoot>;

}  // namespace

TEST(VSimple, Examples) {
  EXPECT_EQ(support(v_simple(1, 3)), (Roots{{1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(support(v_simple(2, 3)), (Roots{{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_EQ(support(v_simple(1, 1)), (Roots{{1, 2}}));
  EXPECT_THROW(v_simple(4, 3), InputError);
}

TEST(VComponent, Examples) {
  EXPECT_EQ(support(v_component({Edge::R, 2, 2}, 3)), (Roots{{1, 3}, {1, 4}}));
  EXPECT_EQ(support(v_component({Edge::L, 3, 3}, 3)), (Roots{{1, 4}, {2, 4}}));
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(support(v_component({Edge::L, 2, n}, n)), (Roots{{1, n + 1}}));
  EXPECT_THROW(v_component({Edge::L, 1, 2}, 3), InputError);
}

TEST(VPartialQuiver, Examples) {
  EXPECT_EQ(support(v_partial_quiver(PartialQuiver::parse("-R"))), (Roots{{1, 3}, {1, 4}}));
  const RootVector w = w_partial_quiver(PartialQuiver::parse("LR"));
  EXPECT_EQ(w(1, 3), 1);
  EXPECT_EQ(w(1, 4), 2);
  EXPECT_EQ(w(2, 4), 1);
  const RootVector v = v_partial_quiver(PartialQuiver::parse("LR"));
  EXPECT_EQ(support(v), (Roots{{1, 3}, {1, 4}, {2, 4}}));
  for (const auto& r : support(v)) EXPECT_EQ(v[r], 1);
  EXPECT_EQ(support(v_partial_quiver(PartialQuiver::parse("L-"))), (Roots{{1, 4}, {2, 4}}));
}

TEST(VPartialQuiver, IsCeilingOfHalf) {
  for (const auto& p : all_partial_quivers(6)) {
    const RootVector w = w_partial_quiver(p);
    const RootVector v = v_partial_quiver(p);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(v.entries()[i], (w.entries()[i] + 1) / 2);
  }
}

TEST(VerifyTheorem, Word132132) {
  const ReducedWord w({1, 3, 2, 1, 3, 2}, 3);
  const TheoremReport r = verify_theorem(w);
  EXPECT_TRUE(r.overall);
  EXPECT_TRUE(r.unimodular);
  const auto ord = root_ordering(w);
  bool seen = false;
  for (const auto& v : r.verdicts) {
    if (v.label != RowLabel(ChamberLabel{0, 3})) continue;
    seen = true;
    ASSERT_TRUE(v.partial_quiver.has_value());
    EXPECT_EQ(v.partial_quiver->to_string(), "-R");
    EXPECT_EQ(v.formula.to_positions(ord), (std::vector<std::int64_t>{0, 0, 1, 0, 1, 0}));
  }
  EXPECT_TRUE(seen);
}

TEST(VerifyTheorem, SmallRanks) {
  const TheoremReport s3 = verify_theorem(ReducedWord({1, 2, 1}, 2));
  EXPECT_TRUE(s3.overall);
  for (const auto& v : s3.verdicts) {
    if (!v.partial_quiver) continue;
    EXPECT_EQ(v.partial_quiver->to_string(), "R");
    EXPECT_EQ(v.inverse.to_positions(root_ordering(s3.word)), (std::vector<std::int64_t>{0, 1, 0}));
  }
  const TheoremReport one = verify_theorem(ReducedWord({1}, 1));
  EXPECT_TRUE(one.overall);
  ASSERT_EQ(one.verdicts.size(), 1u);
  EXPECT_EQ(one.verdicts[0].label, RowLabel(SimpleRootLabel{1}));
}

TEST(VerifyAll, Exhaustive) {
  const VerificationReport two = verify_all(2, Exhaustive{});
  EXPECT_EQ(two.checked, 2u);
  EXPECT_TRUE(two.ok());
  const VerificationReport three = verify_all(3, Exhaustive{}, 3);
  EXPECT_EQ(three.checked, 16u);
  EXPECT_TRUE(three.mismatches.empty());
  EXPECT_EQ(three.non_unimodular, 0u);
}

TEST(VerifyAll, SampleIsDeterministicAcrossJobCounts) {
  const VerificationReport a = verify_all(5, Sample{60, 1}, 1);
  const VerificationReport b = verify_all(5, Sample{60, 1}, 4);
  EXPECT_EQ(a.checked, 60u);
  EXPECT_EQ(b.checked, 60u);
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(b.ok());
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(sampled_word(5, 1, i), sampled_word(5, 1, i));
  EXPECT_NE(sampled_word(5, 1, 0), sampled_word(5, 2, 0));
}

TEST(VerificationReport, MergeCountsAndSortsMismatches) {
  const ReducedWord x({1, 2, 1}, 2), y({2, 1, 2}, 2);
  VerificationReport a, b;
  a.checked = 1;
  a.mismatches.push_back({y, SimpleRootLabel{1}, RootVector(2), RootVector(2)});
  b.checked = 2;
  b.mismatches.push_back({x, SimpleRootLabel{1}, RootVector(2), RootVector(2)});
  a.merge(b);
  EXPECT_EQ(a.checked, 3u);
  ASSERT_EQ(a.mismatches.size(), 2u);
  EXPECT_EQ(a.mismatches[0].word, x);
  EXPECT_FALSE(a.ok());
}
