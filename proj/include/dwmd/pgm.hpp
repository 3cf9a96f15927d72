#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "dwmd/image.hpp"

namespace dwmd {

// Decodes a P5 (binary) or P2 (ASCII) PGM with maxval 255. '#' comments are
// accepted anywhere whitespace is allowed in the header.
// Throws FormatError, UnsupportedDepthError or TruncationError.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// "P5\n<w> <h>\n255\n" + raw bytes, or P2 with one image row per line.
std::vector<std::uint8_t> write_pgm(const GrayImage& img, bool ascii = false);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img,
              bool ascii = false);

}  // namespace dwmd
