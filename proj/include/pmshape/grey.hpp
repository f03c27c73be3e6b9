/**
 * @file grey.hpp
 * @brief Principal moments and orientation of grey-level images.
 *
 * The image moments are mu_k(g) = integral (x + jy)^k g(x, y) dx dy,
 * approximated by the midpoint rule at pixel centers. Rotating the image by
 * phi multiplies mu_k by e^{jk phi}, so the point-set orientation pipeline
 * applies unchanged. Unlike point sets, an image may have its nonzero moments
 * only at multiples of some gamma > 1 without being gamma-fold symmetric; in
 * that case no coprime pair exists and orient_image() reports
 * DegenerateSpectrum.
 */
#pragma once

#include <pmshape/pma.hpp>
#include <pmshape/types.hpp>

#include <cstddef>
#include <vector>

namespace pmshape {

/**
 * @brief Coordinate frame of an image.
 *
 * World coordinates put the grid center at 0 with x to the right and y up,
 * one pixel = pitch units. Frame coordinates are (world - origin) / scale.
 */
struct ImageFrame {
    Complex origin{0.0, 0.0};
    double scale = 1.0;
    bool centered = false;  ///< set by center_image()
};

/// Row-major grid of finite, nonnegative intensities.
class GreyImage {
public:
    GreyImage(std::size_t width, std::size_t height, std::vector<double> intensities,
              double pitch = 1.0);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] double pitch() const noexcept { return pitch_; }
    [[nodiscard]] const ImageFrame& frame() const noexcept { return frame_; }
    [[nodiscard]] std::span<const double> intensities() const noexcept { return values_; }
    [[nodiscard]] double at(std::size_t col, std::size_t row) const { return values_[row * width_ + col]; }

    /// World coordinate of a pixel center.
    [[nodiscard]] Complex world_position(std::size_t col, std::size_t row) const noexcept;
    /// Frame coordinate of a pixel center.
    [[nodiscard]] Complex frame_position(std::size_t col, std::size_t row) const noexcept;

    [[nodiscard]] GreyImage with_frame(const ImageFrame& frame) const;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<double> values_;
    double pitch_;
    ImageFrame frame_{};
};

/**
 * @brief Moves the frame origin to the intensity centroid and scales it so the
 *        intensity-weighted mean squared radius is 1.
 * @throws Error(ZeroMass) when the image has no intensity.
 */
GreyImage center_image(const GreyImage& img);

/// Subtracts the minimum intensity from every pixel.
GreyImage subtract_minimum(const GreyImage& img);

/// Integral of g over the frame: sum of intensities times (pitch/scale)^2.
double image_mass(const GreyImage& img);

/// mu_k for k = 1..max_order in frame coordinates.
MomentSpectrum image_moments(const GreyImage& img, int max_order);

/**
 * @brief Counterclockwise rotation about the frame origin.
 *
 * Inverse-mapped bilinear resampling, zero outside the grid. Quarter turns of
 * a square grid whose frame origin is the grid center are exact pixel
 * permutations.
 */
GreyImage rotate_image(const GreyImage& img, double phi);

/**
 * @brief Orientation of an image by the same pipeline as for point sets.
 *
 * Conditioning uses the total absolute intensity as mass. Contraction by
 * gamma reads mu_{gamma k} directly, since an image has no powered form.
 *
 * @throws Error(AllMomentsZero) for radial images.
 * @throws Error(DegenerateSpectrum) when no coprime pair of nonzero orders exists.
 */
OrientationEstimate orient_image(const GreyImage& img, const PmaOptions& options = {});

}  // namespace pmshape
