#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dwmd/image.hpp"

namespace dwmd::internal {

// Copy of an image extended by a 2-pixel mirror border so the 5x5 window
// around any pixel can be read without bounds logic. Matches get_reflected.
class PaddedImage {
 public:
  static constexpr int kPad = 2;

  explicit PaddedImage(const GrayImage& img)
      : stride_(img.width() + 2 * kPad),
        data_(static_cast<std::size_t>(stride_) * (img.height() + 2 * kPad)) {
    for (int i = -kPad; i < img.height() + kPad; ++i) {
      const int si = reflect_index(i, img.height());
      for (int j = -kPad; j < img.width() + kPad; ++j) {
        data_[index(i, j)] = img.at(si, reflect_index(j, img.width()));
      }
    }
  }

  int at(int i, int j) const { return data_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i + kPad) * stride_ + (j + kPad);
  }

  int stride_;
  std::vector<std::uint8_t> data_;
};

}  // namespace dwmd::internal
