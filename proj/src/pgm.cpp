#include "dwmd/pgm.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <string>

namespace dwmd {
namespace {

bool IsSpace(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const std::uint8_t> bytes)
      : bytes_(bytes) {}

  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Next unsigned decimal token, or nullopt at end of input.
  std::optional<long> NextNumber() {
    SkipSpaceAndComments();
    if (pos_ >= bytes_.size()) return std::nullopt;
    if (bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      throw FormatError("expected a decimal number at byte " +
                        std::to_string(pos_));
    }
    long value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw FormatError("header value too large");
      }
      ++pos_;
    }
    if (pos_ < bytes_.size() && !IsSpace(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw FormatError("malformed number at byte " + std::to_string(pos_));
    }
    return value;
  }

  long RequireNumber(const char* what) {
    auto v = NextNumber();
    if (!v) throw TruncationError(std::string("missing ") + what);
    return *v;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' ||
      (bytes[1] != '5' && bytes[1] != '2')) {
    throw FormatError("not a PGM file (expected magic P5 or P2)");
  }
  const bool ascii = bytes[1] == '2';
  HeaderScanner scan(bytes);
  scan.advance(2);
  if (scan.pos() < bytes.size() && !IsSpace(bytes[2]) && bytes[2] != '#') {
    throw FormatError("not a PGM file (bad magic)");
  }

  const long width = scan.RequireNumber("width");
  const long height = scan.RequireNumber("height");
  const long maxval = scan.RequireNumber("maxval");
  if (width < 1 || height < 1) {
    throw FormatError("PGM dimensions must be positive");
  }
  if (maxval != 255) {
    throw UnsupportedDepthError("only maxval 255 is supported, got " +
                                std::to_string(maxval));
  }
  const auto count = static_cast<std::size_t>(width) * height;

  std::vector<std::uint8_t> pixels;
  pixels.reserve(count);
  if (ascii) {
    for (std::size_t n = 0; n < count; ++n) {
      auto v = scan.NextNumber();
      if (!v) {
        throw TruncationError("P2 payload has " + std::to_string(n) + " of " +
                              std::to_string(count) + " samples");
      }
      if (*v > maxval) throw FormatError("sample exceeds maxval");
      pixels.push_back(static_cast<std::uint8_t>(*v));
    }
  } else {
    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t start = scan.pos() + 1;
    if (start > bytes.size() || bytes.size() - start < count) {
      const std::size_t have = start > bytes.size() ? 0 : bytes.size() - start;
      throw TruncationError("P5 payload has " + std::to_string(have) +
                            " of " + std::to_string(count) + " bytes");
    }
    pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(start),
                  bytes.begin() + static_cast<std::ptrdiff_t>(start + count));
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img, bool ascii) {
  std::string header = std::string(ascii ? "P2" : "P5") + "\n" +
                       std::to_string(img.width()) + " " +
                       std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (!ascii) {
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
  }
  for (int i = 0; i < img.height(); ++i) {
    std::string row;
    for (int j = 0; j < img.width(); ++j) {
      if (j) row += ' ';
      row += std::to_string(img.at(i, j));
    }
    row += '\n';
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img,
              bool ascii) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  const auto bytes = write_pgm(img, ascii);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace dwmd
