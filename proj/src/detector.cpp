#include "dwmd/detector.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "padded.hpp"

namespace dwmd {
namespace {

template <class Fetch>
int DirectionIndexWith(Fetch&& fetch, int k, int inner_weight) {
  const int center = fetch(0, 0);
  int sum = 0;
  for (const Offset& o : direction_members(k)) {
    sum += weight(o.s, o.t, inner_weight) * std::abs(fetch(o.s, o.t) - center);
  }
  return sum;
}

}  // namespace

void validate(const DetectionParams& params) {
  if (params.threshold < 0) {
    throw RangeError("threshold must be nonnegative, got " +
                     std::to_string(params.threshold));
  }
  if (params.inner_weight < 1) {
    throw RangeError("inner weight must be at least 1, got " +
                     std::to_string(params.inner_weight));
  }
}

void require_window_size(const GrayImage& img) {
  if (img.width() < 5 || img.height() < 5) {
    throw UnsupportedSizeError("the 5x5 directional window needs an image of "
                               "at least 5x5, got " +
                               std::to_string(img.width()) + "x" +
                               std::to_string(img.height()));
  }
}

int direction_index(const GrayImage& img, int i, int j, int k,
                    int inner_weight) {
  require_window_size(img);
  direction_set(k);  // domain check before any read
  return DirectionIndexWith(
      [&](int s, int t) { return int{get_reflected(img, i + s, j + t)}; }, k,
      inner_weight);
}

int detection_statistic(const GrayImage& img, int i, int j, int inner_weight) {
  int best = direction_index(img, i, j, 1, inner_weight);
  for (int k = 2; k <= kDirectionCount; ++k) {
    best = std::min(best, direction_index(img, i, j, k, inner_weight));
  }
  return best;
}

DetectionMap detect(const GrayImage& img, const DetectionParams& params) {
  validate(params);
  require_window_size(img);
  const internal::PaddedImage padded(img);
  const int w = img.width();
  const int h = img.height();

  DetectionMap map{w, h, std::vector<std::uint32_t>(img.size()), Mask(w, h)};
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      auto fetch = [&](int s, int t) { return padded.at(i + s, j + t); };
      int r = DirectionIndexWith(fetch, 1, params.inner_weight);
      for (int k = 2; k <= kDirectionCount; ++k) {
        r = std::min(r, DirectionIndexWith(fetch, k, params.inner_weight));
      }
      const std::size_t idx = static_cast<std::size_t>(i) * w + j;
      map.statistic[idx] = static_cast<std::uint32_t>(r);
      if (r > params.threshold) map.noisy.set(idx, true);
    }
  }
  return map;
}

}  // namespace dwmd
