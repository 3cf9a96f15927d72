#include "dwmd/noise.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace dwmd {
namespace {

// Unbiased draw from [0, bound), bound >= 1.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

NoisyImage inject_rvin(const GrayImage& img, const NoiseSpec& spec) {
  if (!std::isfinite(spec.level) || spec.level < 0.0 || spec.level > 1.0) {
    throw RangeError("noise level " + std::to_string(spec.level) +
                     " outside [0, 1]");
  }
  const std::size_t total = img.size();
  const auto n = static_cast<std::size_t>(
      std::llround(spec.level * static_cast<double>(total)));

  std::mt19937_64 rng(spec.seed);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t p = 0; p < n; ++p) {
    const auto r = p + static_cast<std::size_t>(UniformBelow(rng, total - p));
    std::swap(order[p], order[r]);
  }

  std::vector<std::uint8_t> px(img.pixels().begin(), img.pixels().end());
  NoiseMask mask(img.width(), img.height());
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t idx = order[p];
    std::uint8_t v;
    do {
      v = static_cast<std::uint8_t>(UniformBelow(rng, 256));
    } while (v == px[idx]);
    px[idx] = v;
    mask.set(idx, true);
  }
  return {GrayImage(img.width(), img.height(), std::move(px)), std::move(mask)};
}

double noise_density(const NoiseMask& mask) {
  return static_cast<double>(mask.count()) / static_cast<double>(mask.size());
}

}  // namespace dwmd
