/**
 * @file types.hpp
 * @brief Value types shared by every module: landmark vectors and moment spectra.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace pmshape {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Principal value of an angle, in (-pi, pi].
double wrap_angle(double angle) noexcept;

/// Wraps an angle to (-period/2, period/2].
double wrap_period(double angle, double period) noexcept;

/// Argument of a complex number in (-pi, pi]. std::arg returns -pi for
/// (-x, -0.0); this folds that case onto +pi.
double principal_arg(Complex z) noexcept;

/**
 * @brief An unlabeled 2D shape: N >= 1 finite landmarks x + jy.
 *
 * Landmark order carries no meaning; every descriptor built on top of this
 * type is invariant to reordering.
 */
class ShapeVector {
public:
    ShapeVector() = default;
    explicit ShapeVector(std::vector<Complex> landmarks);

    [[nodiscard]] std::span<const Complex> landmarks() const noexcept { return landmarks_; }
    [[nodiscard]] std::size_t size() const noexcept { return landmarks_.size(); }
    [[nodiscard]] const Complex& operator[](std::size_t i) const { return landmarks_[i]; }
    [[nodiscard]] auto begin() const noexcept { return landmarks_.begin(); }
    [[nodiscard]] auto end() const noexcept { return landmarks_.end(); }

    /// Multiplies every landmark by e^{j phi}.
    [[nodiscard]] ShapeVector rotated(double phi) const;

private:
    std::vector<Complex> landmarks_;
};

/**
 * @brief A shape with zero centroid and energy N (RMS radius 1).
 *
 * Only produced by normalize_shape() and by rotating another normalized
 * shape, so the invariants hold by construction.
 */
class NormalizedShape {
public:
    [[nodiscard]] const ShapeVector& shape() const noexcept { return shape_; }
    [[nodiscard]] std::span<const Complex> landmarks() const noexcept { return shape_.landmarks(); }
    [[nodiscard]] std::size_t size() const noexcept { return shape_.size(); }

    /// Centroid of the input before normalization.
    [[nodiscard]] Complex source_centroid() const noexcept { return centroid_; }
    /// ||z - mean(z)|| / sqrt(N) of the input before normalization.
    [[nodiscard]] double source_scale() const noexcept { return scale_; }

    [[nodiscard]] NormalizedShape rotated(double phi) const;

private:
    NormalizedShape(ShapeVector shape, Complex centroid, double scale)
        : shape_(std::move(shape)), centroid_(centroid), scale_(scale) {}

    friend NormalizedShape normalize_shape(const ShapeVector& z);

    ShapeVector shape_;
    Complex centroid_{};
    double scale_ = 1.0;
};

enum class MomentKind { PowerSum, Principal, Conditioned };

/**
 * @brief Complex moments of orders 1..K.
 *
 * Order 0 is never stored: it is N for power sums and 1 for principal moments.
 */
class MomentSpectrum {
public:
    MomentSpectrum(MomentKind kind, std::vector<Complex> values)
        : kind_(kind), values_(std::move(values)) {}

    [[nodiscard]] MomentKind kind() const noexcept { return kind_; }
    [[nodiscard]] int max_order() const noexcept { return static_cast<int>(values_.size()); }
    /// Moment of order k, 1 <= k <= max_order().
    [[nodiscard]] Complex at(int k) const;
    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }

private:
    MomentKind kind_;
    std::vector<Complex> values_;
};

}  // namespace pmshape
