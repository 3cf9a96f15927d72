#pragma once

#include <stdexcept>
#include <string>

namespace dwmd {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch between a buffer and its declared shape, or between
// two images that must agree.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A gray level or parameter outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Coordinate beyond the 2-pixel window reach of reflected access.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Image too small for the requested operation.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

// Direction index outside {1,2,3,4}.
class DomainError : public Error {
 public:
  using Error::Error;
};

// PGM decoding failures.
class FormatError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDepthError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

// Image fidelity is undefined against an all-zero reference.
class UndefinedFidelityError : public Error {
 public:
  using Error::Error;
};

}  // namespace dwmd
