#include "dwmd/mask.hpp"

#include <algorithm>
#include <string>

namespace dwmd {

Mask::Mask(int width, int height, bool value)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw SizeError("mask dimensions must be positive");
  }
  flags_.assign(static_cast<std::size_t>(width) * height, value ? 1 : 0);
}

Mask::Mask(int width, int height, std::vector<std::uint8_t> flags)
    : width_(width), height_(height), flags_(std::move(flags)) {
  if (width < 1 || height < 1 ||
      flags_.size() != static_cast<std::size_t>(width) * height) {
    throw SizeError("mask of " + std::to_string(flags_.size()) +
                    " flags does not match " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  for (auto& f : flags_) f = f ? 1 : 0;
}

std::size_t Mask::count() const {
  return static_cast<std::size_t>(
      std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

GrayImage mask_to_image(const Mask& mask) {
  std::vector<std::uint8_t> px(mask.size());
  for (std::size_t n = 0; n < px.size(); ++n) px[n] = mask[n] ? 255 : 0;
  return GrayImage(mask.width(), mask.height(), std::move(px));
}

Mask mask_from_image(const GrayImage& img) {
  std::vector<std::uint8_t> flags(img.pixels().begin(), img.pixels().end());
  return Mask(img.width(), img.height(), std::move(flags));
}

}  // namespace dwmd
