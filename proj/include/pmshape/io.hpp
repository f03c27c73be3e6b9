/**
 * @file io.hpp
 * @brief Landmark text files and ASCII (P2) PGM images.
 *
 * Landmark files hold one "x y" pair per line; blank lines and lines starting
 * with '#' are skipped. Numbers are parsed and printed independently of the
 * process locale.
 */
#pragma once

#include <pmshape/grey.hpp>
#include <pmshape/types.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace pmshape::io {

ShapeVector read_landmarks(std::istream& in);
ShapeVector read_landmarks(const std::filesystem::path& path);
void write_landmarks(std::ostream& out, std::span<const Complex> landmarks);

/// Reads P2; intensities are value / maxval. Pitch defaults to 1.
GreyImage read_pgm(std::istream& in, double pitch = 1.0);
GreyImage read_pgm(const std::filesystem::path& path, double pitch = 1.0);

/// Writes P2 with maxval 255; intensities are clamped to [0, 1] and rounded.
void write_pgm(std::ostream& out, const GreyImage& img);
void write_pgm(const std::filesystem::path& path, const GreyImage& img);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace pmshape::io
