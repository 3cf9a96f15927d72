#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dwmd/error.hpp"

namespace dwmd {

// 8-bit grayscale raster, row-major, addressed as (i = row, j = column).
// Immutable once constructed.
class GrayImage {
 public:
  // Throws SizeError unless width, height >= 1 and pixels.size() ==
  // width * height.
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  std::uint8_t at(int i, int j) const {
    return pixels_[static_cast<std::size_t>(i) * width_ + j];
  }
  std::span<const std::uint8_t> pixels() const { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// Builds an image from integer gray levels. Throws SizeError on a shape
// mismatch and RangeError when a value falls outside [0, 255].
GrayImage make_image(int width, int height, std::span<const int> data);

// Pixel read with mirror reflection about the border, without repeating the
// edge row/column: -1 -> 1, -2 -> 2, height -> height-2, height+1 -> height-3.
// Coordinates may reach at most 2 pixels outside the image (BoundsError
// otherwise); the image must be at least 3x3 (UnsupportedSizeError).
std::uint8_t get_reflected(const GrayImage& img, int i, int j);

// Maps an index in [-2, n+1] into [0, n) by reflection. Requires n >= 3.
constexpr int reflect_index(int idx, int n) {
  if (idx < 0) return -idx;
  if (idx >= n) return 2 * (n - 1) - idx;
  return idx;
}

struct Offset {
  int s;  // row
  int t;  // column

  friend constexpr bool operator==(Offset, Offset) = default;
};

// The four principal directions through a 5x5 window.
inline constexpr int kDirectionCount = 4;

struct DirectionSet {
  int k;                           // 1..4
  std::array<Offset, 4> members;   // center excluded
  std::array<Offset, 5> full_members;  // center at index 2
};

// k = 1 main diagonal, 2 horizontal, 3 anti-diagonal, 4 vertical.
// Throws DomainError for k outside {1,2,3,4}.
const DirectionSet& direction_set(int k);
const std::array<Offset, 4>& direction_members(int k);

// 2 inside the 3x3 core (max(|s|,|t|) <= 1), 1 on the outer ring.
constexpr int weight(int s, int t, int inner_weight = 2) {
  const int as = s < 0 ? -s : s;
  const int at = t < 0 ? -t : t;
  return (as <= 1 && at <= 1) ? inner_weight : 1;
}

}  // namespace dwmd
