#pragma once

#include <cstdint>
#include <utility>

#include "dwmd/image.hpp"
#include "dwmd/mask.hpp"

namespace dwmd {

struct NoiseSpec {
  double level = 0.0;  // fraction of pixels to corrupt, in [0, 1]
  std::uint64_t seed = 0;
};

using NoiseMask = Mask;

struct NoisyImage {
  GrayImage image;
  NoiseMask mask;
};

// Random-valued impulse noise. Exactly round(level * N) distinct pixels are
// replaced with a uniform draw from [0, 255] that differs from the original.
//
// The stream is fully pinned so output is bit-identical across platforms:
//   - engine: std::mt19937_64 seeded with spec.seed (the standard fixes its
//     output sequence);
//   - bounded draws: rejection sampling, accept x >= 2^64 mod bound and
//     return x % bound;
//   - positions: partial Fisher-Yates over 0..N-1, the first n slots chosen;
//   - values: one draw per chosen position in selection order, re-drawn
//     while equal to the original pixel.
// Throws RangeError if level is outside [0, 1] or not finite.
NoisyImage inject_rvin(const GrayImage& img, const NoiseSpec& spec);

double noise_density(const NoiseMask& mask);

}  // namespace dwmd
