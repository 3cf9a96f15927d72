#include "dwmd/image.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace dwmd {
namespace {

GrayImage Grid3x3() {
  const std::vector<int> d = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  return make_image(3, 3, d);
}

TEST(MakeImage, MinimalImage) {
  const std::vector<int> d = {0};
  const GrayImage img = make_image(1, 1, d);
  EXPECT_EQ(img.width(), 1);
  EXPECT_EQ(img.height(), 1);
  EXPECT_EQ(img.at(0, 0), 0);
}

TEST(MakeImage, SizeMismatch) {
  const std::vector<int> d = {1, 2, 3};
  EXPECT_THROW(make_image(2, 2, d), SizeError);
  EXPECT_THROW(make_image(0, 3, d), SizeError);
}

TEST(MakeImage, RowMajor) {
  const std::vector<int> d = {10, 20, 30};
  EXPECT_EQ(make_image(3, 1, d).at(0, 2), 30);
}

TEST(MakeImage, RangeError) {
  const std::vector<int> hi = {0, 256};
  const std::vector<int> lo = {-1, 0};
  EXPECT_THROW(make_image(2, 1, hi), RangeError);
  EXPECT_THROW(make_image(2, 1, lo), RangeError);
}

TEST(GetReflected, Examples) {
  const GrayImage img = Grid3x3();
  EXPECT_EQ(get_reflected(img, -1, 0), 4);
  EXPECT_EQ(get_reflected(img, -2, -2), 9);
  EXPECT_EQ(get_reflected(img, 1, 1), 5);
  // height -> height-2, height+1 -> height-3
  EXPECT_EQ(get_reflected(img, 3, 0), 4);
  EXPECT_EQ(get_reflected(img, 4, 0), 1);
  EXPECT_EQ(get_reflected(img, 0, 4), 1);
}

TEST(GetReflected, Errors) {
  const GrayImage img = Grid3x3();
  EXPECT_THROW(get_reflected(img, -3, 0), BoundsError);
  EXPECT_THROW(get_reflected(img, 0, 5), BoundsError);
  const std::vector<int> d(4, 0);
  EXPECT_THROW(get_reflected(make_image(2, 2, d), 0, 0), UnsupportedSizeError);
}

TEST(GetReflected, MatchesDirectIndexingInRange) {
  std::mt19937 rng(3);
  std::vector<std::uint8_t> px(7 * 5);
  for (auto& v : px) v = static_cast<std::uint8_t>(rng() % 256);
  const GrayImage img(7, 5, px);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 7; ++j) EXPECT_EQ(get_reflected(img, i, j), img.at(i, j));
}

TEST(ReflectIndex, InvolutionOnWindowReach) {
  for (int n = 3; n <= 9; ++n) {
    for (int idx = -2; idx <= n + 1; ++idx) {
      const int r = reflect_index(idx, n);
      ASSERT_GE(r, 0);
      ASSERT_LT(r, n);
      // Mirror about the nearest border and back lands on the same index.
      EXPECT_EQ(reflect_index(r, n), r);
      if (idx < 0) EXPECT_EQ(reflect_index(-r, n), r);
      if (idx >= n) EXPECT_EQ(reflect_index(2 * (n - 1) - r, n), r);
    }
  }
}

TEST(DirectionMembers, ListedSets) {
  using V = std::vector<std::pair<int, int>>;
  auto as_pairs = [](int k) {
    V out;
    for (const Offset& o : direction_members(k)) out.emplace_back(o.s, o.t);
    return out;
  };
  EXPECT_EQ(as_pairs(1), (V{{-2, -2}, {-1, -1}, {1, 1}, {2, 2}}));
  EXPECT_EQ(as_pairs(2), (V{{0, -2}, {0, -1}, {0, 1}, {0, 2}}));
  EXPECT_EQ(as_pairs(3), (V{{2, -2}, {1, -1}, {-1, 1}, {-2, 2}}));
  EXPECT_EQ(as_pairs(4), (V{{-2, 0}, {-1, 0}, {1, 0}, {2, 0}}));
}

TEST(DirectionMembers, DomainError) {
  EXPECT_THROW(direction_members(0), DomainError);
  EXPECT_THROW(direction_members(5), DomainError);
}

TEST(DirectionSet, Orientation) {
  for (const Offset& o : direction_set(1).members) EXPECT_EQ(o.s, o.t);
  for (const Offset& o : direction_set(2).members) EXPECT_EQ(o.s, 0);
  for (const Offset& o : direction_set(3).members) EXPECT_EQ(o.s, -o.t);
  for (const Offset& o : direction_set(4).members) EXPECT_EQ(o.t, 0);
}

TEST(DirectionSet, FullMembersHaveCenterThird) {
  for (int k = 1; k <= 4; ++k) {
    const DirectionSet& d = direction_set(k);
    EXPECT_EQ(d.k, k);
    EXPECT_EQ(d.full_members[2], (Offset{0, 0}));
    EXPECT_EQ(d.full_members[0], d.members[0]);
    EXPECT_EQ(d.full_members[1], d.members[1]);
    EXPECT_EQ(d.full_members[3], d.members[2]);
    EXPECT_EQ(d.full_members[4], d.members[3]);
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(-1, -1), 2);
  EXPECT_EQ(weight(0, 2), 1);
  EXPECT_EQ(weight(1, 0), 2);
}

TEST(Weight, EachDirectionHasTwoInnerAndTwoOuter) {
  std::set<std::pair<int, int>> stencil;
  for (int k = 1; k <= 4; ++k) {
    int total = 0;
    int inner = 0;
    for (const Offset& o : direction_members(k)) {
      total += weight(o.s, o.t);
      inner += weight(o.s, o.t) == 2;
      stencil.emplace(o.s, o.t);
    }
    EXPECT_EQ(total, 6);
    EXPECT_EQ(inner, 2);
  }
  // Sixteen distinct offsets: the full 3x3 ring plus eight outer points.
  EXPECT_EQ(stencil.size(), 16u);
  EXPECT_EQ(stencil.count({0, 0}), 0u);
}

}  // namespace
}  // namespace dwmd
