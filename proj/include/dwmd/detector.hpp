#pragma once

#include <cstdint>
#include <vector>

#include "dwmd/image.hpp"
#include "dwmd/mask.hpp"

namespace dwmd {

struct DetectionParams {
  int threshold = 256;   // a pixel is noisy iff its statistic exceeds this
  int inner_weight = 2;  // weight of the 3x3-core neighbors
};

// Throws RangeError unless threshold >= 0 and inner_weight >= 1.
void validate(const DetectionParams& params);

struct DetectionMap {
  int width;
  int height;
  std::vector<std::uint32_t> statistic;  // row-major, min direction index
  Mask noisy;

  std::uint32_t statistic_at(int i, int j) const {
    return statistic[static_cast<std::size_t>(i) * width + j];
  }
};

// Weighted sum of |y(i+s, j+t) - y(i, j)| over the four off-center members
// of direction k. Neighbors are read with mirror reflection. The image must be
// at least 5x5.
int direction_index(const GrayImage& img, int i, int j, int k,
                    int inner_weight = 2);

// Minimum of the four direction indexes. Small on flat regions and on edges
// or thin lines (the aligned direction stays small), large on impulses.
int detection_statistic(const GrayImage& img, int i, int j,
                        int inner_weight = 2);

// Computes the statistic for every pixel in one pass and flags pixels whose
// statistic strictly exceeds params.threshold.
DetectionMap detect(const GrayImage& img, const DetectionParams& params = {});

// Requires width, height >= 5.
void require_window_size(const GrayImage& img);

}  // namespace dwmd
