#include <pmshape/fixtures.hpp>

#include <pmshape/error.hpp>
#include <pmshape/random.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace pmshape::fixtures {

namespace {

Complex unit(double angle) { return std::polar(1.0, angle); }

// Pixel-center world coordinates of a size x size grid covering [-half, half]^2.
template <class F>
GreyImage render(std::size_t size, double half_extent, int supersample, F&& g) {
    if (size == 0 || supersample < 1 || !(half_extent > 0.0))
        throw Error(ErrorKind::InvalidArgument, "bad render parameters");
    const double pitch = 2.0 * half_extent / static_cast<double>(size);
    const double center = 0.5 * static_cast<double>(size - 1);
    std::vector<double> values(size * size);
    const auto rows = static_cast<long>(size);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            const double x0 = pitch * (static_cast<double>(c) - center);
            const double y0 = pitch * (center - static_cast<double>(r));
            double acc = 0.0;
            for (int i = 0; i < supersample; ++i)
                for (int j = 0; j < supersample; ++j)
                    acc += g(x0 + pitch * ((i + 0.5) / supersample - 0.5),
                             y0 + pitch * ((j + 0.5) / supersample - 0.5));
            values[static_cast<std::size_t>(r) * size + c] = acc / (supersample * supersample);
        }
    }
    return GreyImage(size, size, std::move(values), pitch);
}

}  // namespace

ShapeVector five_point_cm_counterexample() {
    return ShapeVector({1.0, {0.0, 1.0}, {0.0, -1.0}, unit(kTwoPi / 3), unit(-kTwoPi / 3)});
}

ShapeVector two_fold_cm_counterexample() {
    std::vector<Complex> z;
    for (double a : {0.0, kPi / 3, -kPi / 3, kPi / 4, -kPi / 4}) {
        z.push_back(unit(a));
        z.push_back(-unit(a));
    }
    return ShapeVector(std::move(z));
}

ShapeVector gc_counterexample() { return ShapeVector({1.0, -0.25, -0.75}); }

ShapeVector seven_landmarks() {
    return ShapeVector({{0.10, 0.90}, {1.20, 0.30}, {0.80, -0.70}, {-0.30, -1.10},
                        {-1.00, -0.20}, {-0.60, 0.70}, {0.40, 0.10}});
}

ShapeVector elongated_contour(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "contour needs at least 3 points");
    // Egg outline: long axis along x, blunt end at +x.
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        z[i] = {2.0 * std::cos(t), std::sin(t) * (1.0 + 0.35 * std::cos(t))};
    }
    return ShapeVector(std::move(z));
}

ShapeVector three_fold_contour(std::size_t n) {
    const std::size_t per_arm = std::max<std::size_t>((n + 2) / 3, 1);
    std::vector<Complex> arm(per_arm);
    for (std::size_t i = 0; i < per_arm; ++i) {
        const double t = kTwoPi / 3 * static_cast<double>(i) / static_cast<double>(per_arm);
        const double r = 1.0 + 0.3 * std::cos(3 * t) + 0.12 * std::sin(6 * t + 0.4);
        arm[i] = std::polar(r, t);
    }
    return replicate_fold(arm, 3);
}

ShapeVector replicate_fold(std::span<const Complex> base, int gamma) {
    if (gamma < 1 || base.empty()) throw Error(ErrorKind::InvalidArgument, "bad fold replication");
    std::vector<Complex> z;
    z.reserve(base.size() * static_cast<std::size_t>(gamma));
    for (int s = 0; s < gamma; ++s) {
        const Complex r = unit(kTwoPi * s / gamma);
        for (const Complex& b : base) z.push_back(b * r);
    }
    return ShapeVector(std::move(z));
}

ShapeVector gaussian_shape(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rng(seed, stream);
    std::vector<Complex> z(n);
    for (auto& p : z) p = rng.complex_normal();
    return ShapeVector(std::move(z));
}

GreyImage degenerate_spectrum_image(std::size_t size, double half_extent, int supersample) {
    const double outer = std::cbrt(2.0);
    return render(size, half_extent, supersample, [outer](double x, double y) {
        const double r2 = x * x + y * y;
        const double r = std::sqrt(r2);
        if (r >= outer) return 0.0;
        const double radial = r < 1.0 ? 1.0 : -1.0;
        // cos t + cos 2t with cos t = x / r, cos 2t = (x^2 - y^2) / r^2
        const double angular = r > 0.0 ? x / r + (x * x - y * y) / r2 : 2.0;
        return (radial * angular + 2.0) / kPi;
    });
}

GreyImage asymmetric_blobs(std::size_t size) {
    struct Blob {
        double cx, cy, sx, sy, angle, amplitude;
    };
    static constexpr std::array<Blob, 4> blobs{{{0.25, 0.10, 0.18, 0.09, 0.3, 1.0},
                                                {-0.20, 0.25, 0.10, 0.10, 0.0, 0.7},
                                                {-0.10, -0.30, 0.15, 0.07, -0.8, 0.8},
                                                {0.35, -0.25, 0.07, 0.07, 0.0, 0.5}}};
    auto img = render(size, 1.0, 1, [](double x, double y) {
        double v = 0.0;
        for (const auto& b : blobs) {
            const double c = std::cos(b.angle);
            const double s = std::sin(b.angle);
            const double u = (c * (x - b.cx) + s * (y - b.cy)) / b.sx;
            const double w = (-s * (x - b.cx) + c * (y - b.cy)) / b.sy;
            v += b.amplitude * std::exp(-0.5 * (u * u + w * w));
        }
        return v;
    });
    const auto values = img.intensities();
    const double peak = *std::max_element(values.begin(), values.end());
    std::vector<double> scaled(values.begin(), values.end());
    for (auto& v : scaled) v /= peak;
    return GreyImage(size, size, std::move(scaled), img.pitch());
}

GreyImage uniform_disc(std::size_t size, double radius_fraction, int supersample) {
    const double r2 = radius_fraction * radius_fraction;
    return render(size, 1.0, supersample, [r2](double x, double y) { return x * x + y * y < r2 ? 1.0 : 0.0; });
}

}  // namespace pmshape::fixtures
