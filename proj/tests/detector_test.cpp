#include "dwmd/detector.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace dwmd {
namespace {

using oracle::Constant;
using oracle::RandomImage;
using oracle::WithPixel;

// Left half 0, right half 255.
GrayImage VerticalStep(int w, int h) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) px[i * w + j] = j < w / 2 ? 0 : 255;
  return GrayImage(w, h, px);
}

TEST(DirectionIndex, ConstantImageIsZero) {
  const GrayImage img = Constant(7, 7, 100);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(direction_index(img, 3, 3, k), 0);
}

TEST(DirectionIndex, ImpulseOnFlatBackground) {
  const GrayImage img = WithPixel(Constant(9, 9, 100), 4, 4, 200);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(direction_index(img, 4, 4, k), 600);
}

TEST(DirectionIndex, AlignedWithVerticalStep) {
  const GrayImage img = VerticalStep(10, 10);
  EXPECT_EQ(direction_index(img, 5, 5, 4), 0);
  EXPECT_GT(direction_index(img, 5, 5, 2), 0);
}

TEST(DirectionIndex, Errors) {
  const GrayImage img = Constant(5, 5, 0);
  EXPECT_THROW(direction_index(img, 2, 2, 0), DomainError);
  EXPECT_THROW(direction_index(img, 2, 2, 5), DomainError);
  EXPECT_THROW(direction_index(Constant(4, 5, 0), 2, 2, 1),
               UnsupportedSizeError);
}

TEST(DetectionStatistic, Examples) {
  EXPECT_EQ(detection_statistic(Constant(6, 6, 3), 2, 2), 0);
  for (int delta : {1, 43, 100, 155}) {
    const GrayImage img = WithPixel(Constant(9, 9, 100), 4, 4, 100 + delta);
    EXPECT_EQ(detection_statistic(img, 4, 4), 6 * delta);
  }
  const GrayImage step = VerticalStep(10, 10);
  EXPECT_EQ(detection_statistic(step, 5, 5), 0);
  EXPECT_GT(direction_index(step, 5, 5, 1), 0);
  EXPECT_GT(direction_index(step, 5, 5, 3), 0);
}

TEST(Detect, ConstantImageHasNoFlags) {
  const DetectionMap map = detect(Constant(8, 8, 77));
  EXPECT_EQ(map.noisy.count(), 0u);
}

TEST(Detect, AmplitudeLaw) {
  const GrayImage flat = Constant(12, 12, 50);
  EXPECT_TRUE(detect(WithPixel(flat, 6, 6, 93)).noisy.at(6, 6));   // 6*43
  EXPECT_FALSE(detect(WithPixel(flat, 6, 6, 92)).noisy.at(6, 6));  // 6*42
}

TEST(Detect, StatisticEqualToThresholdIsClean) {
  // Center 128 on a zero background; direction 1 keeps its inner pair at 128
  // so d1 = |0-128| + |0-128| = 256 and every other direction is 768.
  GrayImage img = WithPixel(Constant(9, 9, 0), 4, 4, 128);
  img = WithPixel(img, 3, 3, 128);
  img = WithPixel(img, 5, 5, 128);
  ASSERT_EQ(detection_statistic(img, 4, 4), 256);
  DetectionParams params;
  params.threshold = 256;
  EXPECT_FALSE(detect(img, params).noisy.at(4, 4));
  params.threshold = 255;
  EXPECT_TRUE(detect(img, params).noisy.at(4, 4));
}

TEST(Detect, RejectsInvalidParams) {
  const GrayImage img = Constant(5, 5, 0);
  DetectionParams bad;
  bad.threshold = -1;
  EXPECT_THROW(detect(img, bad), RangeError);
  bad = {};
  bad.inner_weight = 0;
  EXPECT_THROW(detect(img, bad), RangeError);
  EXPECT_THROW(detect(Constant(5, 4, 0)), UnsupportedSizeError);
}

TEST(Detect, MatchesLiteralOracle) {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    const GrayImage img = RandomImage(16, 16, seed);
    const DetectionMap map = detect(img);
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; ++j) {
        const long r = oracle::Statistic(img, i, j);
        ASSERT_EQ(map.statistic_at(i, j), r) << seed << " " << i << "," << j;
        ASSERT_EQ(detection_statistic(img, i, j), r);
        ASSERT_EQ(map.noisy.at(i, j), r > 256);
        for (int k = 1; k <= 4; ++k) {
          ASSERT_EQ(direction_index(img, i, j, k),
                    oracle::DirectionIndex(img, i, j, k - 1));
        }
      }
    }
  }
}

TEST(Detect, StatisticBounded) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint8_t> px(20 * 20);
    for (auto& v : px) v = rng() % 2 ? 255 : 0;
    px[210] = static_cast<std::uint8_t>(rng() % 2 ? 0 : 255);
    const DetectionMap map = detect(GrayImage(20, 20, px));
    for (auto r : map.statistic) EXPECT_LE(r, 1530u);
  }
  // The extreme is reachable: a lone 255 in a black field.
  const GrayImage lone = WithPixel(Constant(9, 9, 0), 4, 4, 255);
  EXPECT_EQ(detect(lone).statistic_at(4, 4), 1530u);
}

TEST(Detect, MonotoneInThreshold) {
  const GrayImage img = RandomImage(24, 24, 9);
  DetectionParams params;
  std::size_t previous = img.size() + 1;
  for (int t = 0; t <= 1600; t += 40) {
    params.threshold = t;
    const Mask noisy = detect(img, params).noisy;
    EXPECT_LE(noisy.count(), previous);
    previous = noisy.count();
  }
}

TEST(Detect, ConstantImageNeverFlaggedForAnyThreshold) {
  DetectionParams params;
  for (int value : {0, 128, 255}) {
    for (int t : {0, 1, 256, 5000}) {
      params.threshold = t;
      EXPECT_EQ(detect(Constant(6, 7, value), params).noisy.count(), 0u);
    }
  }
}

TEST(Detect, RotationPermutesDirections) {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const GrayImage img = RandomImage(11, 8, 100 + seed);
    const GrayImage rot = oracle::RotateClockwise(img);
    const DetectionMap a = detect(img);
    const DetectionMap b = detect(rot);
    for (int i = 0; i < img.height(); ++i) {
      for (int j = 0; j < img.width(); ++j) {
        // (i, j) lands at (j, h - 1 - i) after rotation.
        const int ri = j;
        const int rj = img.height() - 1 - i;
        ASSERT_EQ(a.statistic_at(i, j), b.statistic_at(ri, rj));
        EXPECT_EQ(direction_index(img, i, j, 2), direction_index(rot, ri, rj, 4));
        EXPECT_EQ(direction_index(img, i, j, 4), direction_index(rot, ri, rj, 2));
        EXPECT_EQ(direction_index(img, i, j, 1), direction_index(rot, ri, rj, 3));
        EXPECT_EQ(direction_index(img, i, j, 3), direction_index(rot, ri, rj, 1));
      }
    }
  }
}

TEST(Detect, InnerWeightIsConfigurable) {
  const GrayImage img = WithPixel(Constant(9, 9, 100), 4, 4, 110);
  DetectionParams params;
  params.inner_weight = 3;
  params.threshold = 0;
  EXPECT_EQ(detect(img, params).statistic_at(4, 4), 80u);  // (3+3+1+1)*10
}

TEST(Detect, DiagonalFeaturesCleanAwayFromBorder) {
  const int n = 40;
  const std::vector<bool (*)(int, int)> shapes = {
      [](int i, int j) { return i - j == 5; },
      [](int i, int j) { return i + j == 33; },
      [](int i, int j) { return i > j; },
      [](int i, int j) { return i + j > 41; }};
  for (auto inside : shapes) {
    std::vector<std::uint8_t> px(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) px[i * n + j] = inside(i, j) ? 255 : 0;
    const DetectionMap map = detect(GrayImage(n, n, px));
    for (int i = 2; i < n - 2; ++i)
      for (int j = 2; j < n - 2; ++j) EXPECT_FALSE(map.noisy.at(i, j));
  }
}

// Reflection folds a diagonal line leaving through a side into a V, so the
// pixels where it meets the border are isolated in every direction.
TEST(Detect, DiagonalLineFoldsAtBorder) {
  const int n = 12;
  std::vector<std::uint8_t> px(n * n, 0);
  for (int i = 3; i < n; ++i) px[i * n + i - 3] = 255;
  const DetectionMap map = detect(GrayImage(n, n, px));
  EXPECT_TRUE(map.noisy.at(3, 0));
  EXPECT_TRUE(map.noisy.at(11, 8));
  EXPECT_EQ(map.noisy.count(), 2u);
}

}  // namespace
}  // namespace dwmd
