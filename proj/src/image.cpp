#include "dwmd/image.hpp"

#include <string>

namespace dwmd {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) {
    throw SizeError("image dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw SizeError("pixel count " + std::to_string(pixels_.size()) +
                    " does not match " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
}

GrayImage make_image(int width, int height, std::span<const int> data) {
  if (width < 1 || height < 1 ||
      data.size() != static_cast<std::size_t>(width) * height) {
    throw SizeError("data length " + std::to_string(data.size()) +
                    " does not match " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  std::vector<std::uint8_t> pixels;
  pixels.reserve(data.size());
  for (int v : data) {
    if (v < 0 || v > 255) {
      throw RangeError("gray level " + std::to_string(v) +
                       " outside [0, 255]");
    }
    pixels.push_back(static_cast<std::uint8_t>(v));
  }
  return GrayImage(width, height, std::move(pixels));
}

std::uint8_t get_reflected(const GrayImage& img, int i, int j) {
  if (img.width() < 3 || img.height() < 3) {
    throw UnsupportedSizeError("reflected access needs at least 3x3, got " +
                               std::to_string(img.width()) + "x" +
                               std::to_string(img.height()));
  }
  if (i < -2 || i > img.height() + 1 || j < -2 || j > img.width() + 1) {
    throw BoundsError("(" + std::to_string(i) + ", " + std::to_string(j) +
                      ") is beyond the 2-pixel reach");
  }
  return img.at(reflect_index(i, img.height()), reflect_index(j, img.width()));
}

namespace {

constexpr DirectionSet MakeSet(int k, Offset a, Offset b, Offset d, Offset e) {
  return DirectionSet{k, {a, b, d, e}, {a, b, Offset{0, 0}, d, e}};
}

constexpr std::array<DirectionSet, kDirectionCount> kDirections = {
    MakeSet(1, {-2, -2}, {-1, -1}, {1, 1}, {2, 2}),
    MakeSet(2, {0, -2}, {0, -1}, {0, 1}, {0, 2}),
    MakeSet(3, {2, -2}, {1, -1}, {-1, 1}, {-2, 2}),
    MakeSet(4, {-2, 0}, {-1, 0}, {1, 0}, {2, 0}),
};

}  // namespace

const DirectionSet& direction_set(int k) {
  if (k < 1 || k > kDirectionCount) {
    throw DomainError("direction index " + std::to_string(k) +
                      " outside {1,2,3,4}");
  }
  return kDirections[k - 1];
}

const std::array<Offset, 4>& direction_members(int k) {
  return direction_set(k).members;
}

}  // namespace dwmd
