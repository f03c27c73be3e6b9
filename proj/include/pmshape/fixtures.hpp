/**
 * @file fixtures.hpp
 * @brief Reference shapes and images used by tests, the CLI and experiments.
 */
#pragma once

#include <pmshape/grey.hpp>
#include <pmshape/types.hpp>

#include <cstdint>

namespace pmshape::fixtures {

/// {1, j, -j, e^{j2pi/3}, e^{-j2pi/3}}: every C_{q+1,q} vanishes.
ShapeVector five_point_cm_counterexample();

/// {+-1, +-e^{+-j pi/3}, +-e^{+-j pi/4}}: two-fold symmetric, every C_{q+2,q} vanishes.
ShapeVector two_fold_cm_counterexample();

/// {1, -1/4, -3/4}; its reflection -z has identical GC_{1q} moments.
ShapeVector gc_counterexample();

/// A fixed, irregular 7-landmark shape.
ShapeVector seven_landmarks();

/// Dense, elongated and direction-asymmetric closed contour (pear outline).
ShapeVector elongated_contour(std::size_t n = 600);

/// Dense contour with exact three-fold symmetry; n is rounded up to a multiple of 3.
ShapeVector three_fold_contour(std::size_t n = 3000);

/// Base landmarks replicated by rotations of 2 pi / gamma.
ShapeVector replicate_fold(std::span<const Complex> base, int gamma);

/// N i.i.d. circular Gaussian landmarks (unit per-coordinate variance).
ShapeVector gaussian_shape(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

/**
 * @brief Nonnegative rendering of f = (1/pi) R(r) (cos t + cos 2t),
 *        R = H(r) - 2 H(r - 1) + H(r - 2^{1/3}), plus the radial term
 *        (2/pi) H(2^{1/3} - r).
 *
 * The radial term only changes mu_0, so mu_k for k >= 1 are those of f:
 * mu_2 = (1 - 2^{1/3}) / 2 and all other orders vanish. The grid covers
 * [-half_extent, half_extent]^2 and each pixel is the average of
 * supersample^2 point samples.
 */
GreyImage degenerate_spectrum_image(std::size_t size = 1024, double half_extent = 1.3,
                                    int supersample = 4);

/// Sum of anisotropic Gaussian blobs with no rotational symmetry, smooth enough
/// for bilinear resampling; content stays inside the inscribed circle.
GreyImage asymmetric_blobs(std::size_t size = 512);

/// Disc of constant intensity, radius as a fraction of the half width.
GreyImage uniform_disc(std::size_t size = 512, double radius_fraction = 0.6, int supersample = 4);

}  // namespace pmshape::fixtures
