#include "dwmd/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace dwmd {
namespace {

void RequireSameShape(int w1, int h1, int w2, int h2) {
  if (w1 != w2 || h1 != h2) {
    throw SizeError("dimension mismatch: " + std::to_string(w1) + "x" +
                    std::to_string(h1) + " vs " + std::to_string(w2) + "x" +
                    std::to_string(h2));
  }
}

std::uint64_t SumSquaredError(const GrayImage& a, const GrayImage& b) {
  RequireSameShape(a.width(), a.height(), b.width(), b.height());
  std::uint64_t sum = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t n = 0; n < pa.size(); ++n) {
    const int d = int{pa[n]} - int{pb[n]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

constexpr double kPeakSquared = 255.0 * 255.0;

}  // namespace

double Psnr::db() const {
  if (identical_) throw Error("PSNR of identical images has no dB value");
  return db_;
}

std::string Psnr::to_string(int decimals) const {
  if (identical_) return "identical";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, db_);
  return buf;
}

double mse(const GrayImage& reference, const GrayImage& test) {
  return static_cast<double>(SumSquaredError(reference, test)) /
         static_cast<double>(reference.size());
}

Psnr psnr_from_mse(double mse) {
  if (mse == 0.0) return Psnr::identical();
  return Psnr::decibels(10.0 * std::log10(kPeakSquared / mse));
}

Psnr psnr(const GrayImage& reference, const GrayImage& test) {
  return psnr_from_mse(mse(reference, test));
}

double fidelity(const GrayImage& reference, const GrayImage& test) {
  const std::uint64_t err = SumSquaredError(reference, test);
  std::uint64_t energy = 0;
  for (std::uint8_t v : reference.pixels()) {
    energy += static_cast<std::uint64_t>(v) * v;
  }
  if (energy == 0) {
    throw UndefinedFidelityError("fidelity is undefined for an all-zero "
                                 "reference image");
  }
  return 1.0 - static_cast<double>(err) / static_cast<double>(energy);
}

QualityReport evaluate(const GrayImage& reference, const GrayImage& test) {
  const double m = mse(reference, test);
  return {m, psnr_from_mse(m), fidelity(reference, test), reference.size()};
}

DetectionScore detection_score(const Mask& truth, const Mask& predicted) {
  RequireSameShape(truth.width(), truth.height(), predicted.width(),
                   predicted.height());
  DetectionScore score;
  for (std::size_t n = 0; n < truth.size(); ++n) {
    const bool t = truth[n];
    const bool p = predicted[n];
    if (t && p) {
      ++score.true_positives;
    } else if (!t && p) {
      ++score.false_positives;
    } else if (t && !p) {
      ++score.false_negatives;
    } else {
      ++score.true_negatives;
    }
  }
  const auto flagged = score.true_positives + score.false_positives;
  const auto actual = score.true_positives + score.false_negatives;
  score.precision = flagged == 0 ? 1.0
                                 : static_cast<double>(score.true_positives) /
                                       static_cast<double>(flagged);
  score.recall = actual == 0 ? 1.0
                             : static_cast<double>(score.true_positives) /
                                   static_cast<double>(actual);
  return score;
}

DetectionScore detection_score(const Mask& truth,
                               const DetectionMap& predicted) {
  return detection_score(truth, predicted.noisy);
}

}  // namespace dwmd
