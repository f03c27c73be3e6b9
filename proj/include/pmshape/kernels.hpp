/**
 * @file kernels.hpp
 * @brief Data-parallel moment accumulation kernels.
 *
 * Every kernel exists twice: a serial reference in kernels::serial and an
 * OpenMP version in kernels::parallel. Both split the input into the same
 * fixed blocks (kLandmarkBlock landmarks, or one image row), accumulate each
 * block with Neumaier compensated summation, and merge the blocks in index
 * order. The block layout does not depend on the thread count, so the two
 * versions return bit-identical results on every machine.
 */
#pragma once

#include <pmshape/types.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace pmshape::kernels {

/// Neumaier (improved Kahan-Babuska) running sum.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double x) noexcept;
    void merge(const CompensatedSum& other) noexcept;
    [[nodiscard]] double value() const noexcept { return sum + compensation; }
};

struct ComplexAccumulator {
    CompensatedSum re;
    CompensatedSum im;

    void add(Complex x) noexcept {
        re.add(x.real());
        im.add(x.imag());
    }
    void merge(const ComplexAccumulator& other) noexcept {
        re.merge(other.re);
        im.merge(other.im);
    }
    [[nodiscard]] Complex value() const noexcept { return {re.value(), im.value()}; }
};

inline constexpr std::size_t kLandmarkBlock = 256;

/// Pixel (col, row) sits at origin + step * (col - row * j): x grows to the
/// right, y grows upward.
struct PixelLattice {
    std::size_t width = 0;
    std::size_t height = 0;
    std::span<const double> intensities;  ///< row-major, width * height
    Complex origin;                       ///< coordinate of pixel (0, 0)
    double step = 1.0;                    ///< pixel pitch in frame units
};

namespace serial {

/// Compensated sum of a sequence, blocked as described above.
Complex sum(std::span<const Complex> terms);

/// sum_n z_n^k for k = 1..max_order, with running powers per landmark.
std::vector<Complex> power_sums(std::span<const Complex> z, int max_order);

/// sum_pixels w^k g(w) step^2 for k = 0..max_order (index k).
std::vector<Complex> lattice_moments(const PixelLattice& lattice, int max_order);

}  // namespace serial

namespace parallel {

Complex sum(std::span<const Complex> terms);
std::vector<Complex> power_sums(std::span<const Complex> z, int max_order);
std::vector<Complex> lattice_moments(const PixelLattice& lattice, int max_order);

}  // namespace parallel

}  // namespace pmshape::kernels
