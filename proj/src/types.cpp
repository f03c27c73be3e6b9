#include <pmshape/types.hpp>

#include <pmshape/error.hpp>

#include <cmath>
#include <string>

namespace pmshape {

double wrap_angle(double angle) noexcept {
    double r = std::remainder(angle, kTwoPi);  // [-pi, pi]
    return r <= -kPi ? r + kTwoPi : r;
}

double wrap_period(double angle, double period) noexcept {
    double r = std::remainder(angle, period);
    return r <= -0.5 * period ? r + period : r;
}

double principal_arg(Complex z) noexcept {
    double a = std::atan2(z.imag(), z.real());
    return a == -kPi ? kPi : a;
}

ShapeVector::ShapeVector(std::vector<Complex> landmarks) : landmarks_(std::move(landmarks)) {
    if (landmarks_.empty()) throw Error(ErrorKind::InvalidArgument, "shape has no landmarks");
    for (std::size_t i = 0; i < landmarks_.size(); ++i) {
        if (!std::isfinite(landmarks_[i].real()) || !std::isfinite(landmarks_[i].imag()))
            throw Error(ErrorKind::InvalidArgument,
                        "landmark " + std::to_string(i) + " is not finite");
    }
}

ShapeVector ShapeVector::rotated(double phi) const {
    const Complex r = std::polar(1.0, phi);
    std::vector<Complex> out(landmarks_);
    for (auto& z : out) z *= r;
    return ShapeVector(std::move(out));
}

NormalizedShape NormalizedShape::rotated(double phi) const {
    return NormalizedShape(shape_.rotated(phi), centroid_, scale_);
}

Complex MomentSpectrum::at(int k) const {
    if (k < 1 || k > max_order())
        throw Error(ErrorKind::InvalidArgument, "moment order " + std::to_string(k) + " out of range");
    return values_[static_cast<std::size_t>(k - 1)];
}

}  // namespace pmshape
