#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dwmd/image.hpp"

namespace dwmd {

// Row-major boolean grid with the same addressing as GrayImage.
class Mask {
 public:
  Mask(int width, int height, bool value = false);
  Mask(int width, int height, std::vector<std::uint8_t> flags);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return flags_.size(); }

  bool at(int i, int j) const {
    return flags_[static_cast<std::size_t>(i) * width_ + j] != 0;
  }
  bool operator[](std::size_t idx) const { return flags_[idx] != 0; }
  void set(std::size_t idx, bool value) { flags_[idx] = value ? 1 : 0; }

  std::size_t count() const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> flags_;  // 0 or 1
};

// 0 = clean, 255 = flagged.
GrayImage mask_to_image(const Mask& mask);
// Any nonzero gray level reads as flagged.
Mask mask_from_image(const GrayImage& img);

}  // namespace dwmd
