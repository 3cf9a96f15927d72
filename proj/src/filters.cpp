#include "dwmd/filters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "padded.hpp"

namespace dwmd {
namespace {

// n * sum(v^2) - (sum v)^2 for a set of n values: n^2 times the population
// variance. Exact in integers, so comparisons between sets of the same size
// are exact.
template <std::size_t N>
std::int64_t ScaledVariance(const std::array<std::int64_t, N>& v) {
  std::int64_t sum = 0;
  std::int64_t sq = 0;
  for (std::int64_t x : v) {
    sum += x;
    sq += x * x;
  }
  return static_cast<std::int64_t>(N) * sq - sum * sum;
}

std::int64_t NeighborSpread(const DirectionalSample& s) {
  return ScaledVariance<4>(
      {s.neighbors[0], s.neighbors[1], s.neighbors[2], s.neighbors[3]});
}

template <class Fetch>
DirectionalSample SampleWith(Fetch&& fetch, int k) {
  const auto& m = direction_members(k);
  DirectionalSample s;
  for (std::size_t n = 0; n < m.size(); ++n) {
    s.neighbors[n] = static_cast<std::uint8_t>(fetch(m[n].s, m[n].t));
  }
  s.center = static_cast<std::uint8_t>(fetch(0, 0));
  return s;
}

template <class Fetch>
int BestDirectionWith(Fetch&& fetch) {
  int best = 1;
  std::int64_t best_spread = NeighborSpread(SampleWith(fetch, 1));
  for (int k = 2; k <= kDirectionCount; ++k) {
    const std::int64_t spread = NeighborSpread(SampleWith(fetch, k));
    if (spread < best_spread) {
      best = k;
      best_spread = spread;
    }
  }
  return best;
}

template <class Fetch>
std::uint8_t RestoreWith(Fetch&& fetch, int step) {
  const DirectionalSample sample = SampleWith(fetch, BestDirectionWith(fetch));
  return snap_to_set(minimize_center(sample, step), sample);
}

}  // namespace

void validate(const FilterParams& params) {
  validate(params.detection);
  if (params.step < 1) {
    throw RangeError("step must be at least 1, got " +
                     std::to_string(params.step));
  }
}

DirectionalSample directional_sample(const GrayImage& img, int i, int j,
                                     int k) {
  require_window_size(img);
  direction_set(k);
  return SampleWith(
      [&](int s, int t) { return int{get_reflected(img, i + s, j + t)}; }, k);
}

double directional_sd(const GrayImage& img, int i, int j, int k) {
  const auto spread = NeighborSpread(directional_sample(img, i, j, k));
  return std::sqrt(static_cast<double>(spread)) / 4.0;
}

int best_direction(const GrayImage& img, int i, int j) {
  require_window_size(img);
  return BestDirectionWith(
      [&](int s, int t) { return int{get_reflected(img, i + s, j + t)}; });
}

CenterSearch minimize_center_traced(const DirectionalSample& sample,
                                    int step) {
  if (step < 1) {
    throw RangeError("step must be at least 1, got " + std::to_string(step));
  }
  // Work in units of 1/5 gray level: the starting mean is (sum of five
  // integers) / 5, so every candidate is an integer on this scale.
  constexpr std::int64_t kScale = 5;
  constexpr std::int64_t kLo = 0;
  constexpr std::int64_t kHi = 255 * kScale;
  const auto& n = sample.neighbors;
  const std::int64_t stride = kScale * step;

  auto spread_at = [&](std::int64_t x) {
    return ScaledVariance<5>({kScale * n[0], kScale * n[1], x, kScale * n[2],
                              kScale * n[3]});
  };
  auto clamp = [&](std::int64_t x) { return std::clamp(x, kLo, kHi); };

  std::int64_t x = std::int64_t{n[0]} + n[1] + sample.center + n[2] + n[3];
  std::int64_t fx = spread_at(x);
  const std::int64_t up = clamp(x + stride);
  const std::int64_t down = clamp(x - stride);
  const std::int64_t f_up = spread_at(up);
  const std::int64_t f_down = spread_at(down);
  if (fx <= f_up && fx <= f_down) {
    return {static_cast<double>(x) / kScale, 0};
  }

  // f is convex in x, so at most one probe can be below f(mean).
  const std::int64_t dir = f_up < fx ? stride : -stride;
  x = f_up < fx ? up : down;
  fx = f_up < fx ? f_up : f_down;
  int moves = 1;
  for (;;) {
    const std::int64_t next = clamp(x + dir);
    if (next == x) break;
    const std::int64_t f_next = spread_at(next);
    if (f_next >= fx) break;
    x = next;
    fx = f_next;
    ++moves;
  }
  return {static_cast<double>(x) / kScale, moves};
}

double minimize_center(const DirectionalSample& sample, int step) {
  return minimize_center_traced(sample, step).x;
}

std::uint8_t snap_to_set(double x, const DirectionalSample& sample) {
  std::uint8_t best = sample.neighbors[0];
  double best_dist = std::abs(x - best);
  for (std::size_t n = 1; n < sample.neighbors.size(); ++n) {
    const std::uint8_t v = sample.neighbors[n];
    const double dist = std::abs(x - v);
    if (dist < best_dist || (dist == best_dist && v < best)) {
      best = v;
      best_dist = dist;
    }
  }
  return best;
}

std::uint8_t restore_pixel(const GrayImage& img, int i, int j,
                           const FilterParams& params) {
  validate(params);
  require_window_size(img);
  return RestoreWith(
      [&](int s, int t) { return int{get_reflected(img, i + s, j + t)}; },
      params.step);
}

Restoration dwmd_denoise(const GrayImage& img, const FilterParams& params) {
  validate(params);
  require_window_size(img);
  DetectionMap detection = detect(img, params.detection);
  const internal::PaddedImage padded(img);

  std::vector<std::uint8_t> out(img.pixels().begin(), img.pixels().end());
  const int w = img.width();
  for (int i = 0; i < img.height(); ++i) {
    for (int j = 0; j < w; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i) * w + j;
      if (!detection.noisy[idx]) continue;
      out[idx] = RestoreWith(
          [&](int s, int t) { return padded.at(i + s, j + t); }, params.step);
    }
  }
  return {GrayImage(w, img.height(), std::move(out)), std::move(detection)};
}

GrayImage median3x3(const GrayImage& img) {
  if (img.width() < 3 || img.height() < 3) {
    throw UnsupportedSizeError("3x3 median needs at least 3x3, got " +
                               std::to_string(img.width()) + "x" +
                               std::to_string(img.height()));
  }
  const int w = img.width();
  const int h = img.height();
  std::vector<std::uint8_t> out(img.size());
  std::array<std::uint8_t, 9> window;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      std::size_t n = 0;
      for (int di = -1; di <= 1; ++di) {
        const int ri = reflect_index(i + di, h);
        for (int dj = -1; dj <= 1; ++dj) {
          window[n++] = img.at(ri, reflect_index(j + dj, w));
        }
      }
      std::nth_element(window.begin(), window.begin() + 4, window.end());
      out[static_cast<std::size_t>(i) * w + j] = window[4];
    }
  }
  return GrayImage(w, h, std::move(out));
}

}  // namespace dwmd
