#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "dwmd/detector.hpp"
#include "dwmd/image.hpp"
#include "dwmd/mask.hpp"

namespace dwmd {

// PSNR in dB, or the explicit "identical" value when MSE is zero.
class Psnr {
 public:
  static Psnr identical() { return Psnr(); }
  static Psnr decibels(double db) { return Psnr(db); }

  bool is_identical() const { return identical_; }
  // Throws Error when identical.
  double db() const;

  // Fixed-point with `decimals` digits, or "identical".
  std::string to_string(int decimals = 2) const;

  friend bool operator==(const Psnr&, const Psnr&) = default;

 private:
  Psnr() : identical_(true), db_(0.0) {}
  explicit Psnr(double db) : identical_(false), db_(db) {}

  bool identical_;
  double db_;
};

// All take (reference, test) and throw SizeError on a dimension mismatch.
double mse(const GrayImage& reference, const GrayImage& test);
Psnr psnr(const GrayImage& reference, const GrayImage& test);
Psnr psnr_from_mse(double mse);
// 1 - sum (ref - test)^2 / sum ref^2. Throws UndefinedFidelityError when the
// reference is all zero.
double fidelity(const GrayImage& reference, const GrayImage& test);

struct QualityReport {
  double mse;
  Psnr psnr;
  double fidelity;
  std::size_t n_pixels;
};

QualityReport evaluate(const GrayImage& reference, const GrayImage& test);

struct DetectionScore {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t true_negatives = 0;
  double precision = 1.0;  // 0/0 is defined as 1
  double recall = 1.0;
};

DetectionScore detection_score(const Mask& truth, const Mask& predicted);
DetectionScore detection_score(const Mask& truth, const DetectionMap& predicted);

}  // namespace dwmd
