#pragma once

#include <array>
#include <cstdint>

#include "dwmd/detector.hpp"
#include "dwmd/image.hpp"

namespace dwmd {

struct FilterParams {
  DetectionParams detection;
  int step = 5;  // increment of the center-value walk
};

// Throws RangeError on an invalid threshold, inner weight, or step < 1.
void validate(const FilterParams& params);

// Gray levels along one direction through (i, j).
struct DirectionalSample {
  std::array<std::uint8_t, 4> neighbors;  // line order, center excluded
  std::uint8_t center;

  // neighbors with the center inserted as the third element.
  std::array<std::uint8_t, 5> full_set() const {
    return {neighbors[0], neighbors[1], center, neighbors[2], neighbors[3]};
  }
};

DirectionalSample directional_sample(const GrayImage& img, int i, int j, int k);

// Population standard deviation of the four off-center values along k.
double directional_sd(const GrayImage& img, int i, int j, int k);

// Direction whose four neighbors have the smallest spread; ties go to the
// smallest k.
int best_direction(const GrayImage& img, int i, int j);

struct CenterSearch {
  double x;
  int moves;  // accepted steps away from the starting mean
};

// Descends f(x) = SD{a, b, x, d, e} from the mean of all five sample values
// in increments of `step`, clamped to [0, 255], and stops at the last x
// before f would stop decreasing. Returns the mean itself when neither probe
// at mean +/- step improves on it.
double minimize_center(const DirectionalSample& sample, int step);
CenterSearch minimize_center_traced(const DirectionalSample& sample, int step);

// Nearest of the four neighbor values to x; equidistant candidates resolve
// to the smaller gray level.
std::uint8_t snap_to_set(double x, const DirectionalSample& sample);

// Replacement value for a pixel judged noisy.
std::uint8_t restore_pixel(const GrayImage& img, int i, int j,
                           const FilterParams& params = {});

struct Restoration {
  GrayImage image;
  DetectionMap detection;
};

// Single pass: detect on the input, then restore each flagged pixel from the
// unmodified input. Unflagged pixels are copied through.
// Throws UnsupportedSizeError below 5x5.
Restoration dwmd_denoise(const GrayImage& img, const FilterParams& params = {});

// 3x3 median with mirror-reflected borders. Requires at least 3x3.
GrayImage median3x3(const GrayImage& img);

}  // namespace dwmd
