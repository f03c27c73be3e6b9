#include <pmshape/grey.hpp>

#include <pmshape/error.hpp>
#include <pmshape/kernels.hpp>

#include <algorithm>
#include <cmath>

namespace pmshape {

namespace {

kernels::PixelLattice lattice_of(const GreyImage& img) {
    return {img.width(), img.height(), img.intensities(), img.frame_position(0, 0),
            img.pitch() / img.frame().scale};
}

// Number of quarter turns if phi is one within 1e-12, else -1.
int quarter_turns(double phi) {
    const double turns = phi / (0.5 * kPi);
    const double nearest = std::round(turns);
    if (std::abs(turns - nearest) * 0.5 * kPi > 1e-12) return -1;
    return static_cast<int>(((static_cast<long long>(nearest) % 4) + 4) % 4);
}

// One counterclockwise quarter turn of a square grid about its center.
std::vector<double> quarter_turn(std::span<const double> in, std::size_t size) {
    std::vector<double> out(in.size());
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) out[r * size + c] = in[c * size + (size - 1 - r)];
    return out;
}

}  // namespace

GreyImage::GreyImage(std::size_t width, std::size_t height, std::vector<double> intensities,
                     double pitch)
    : width_(width), height_(height), values_(std::move(intensities)), pitch_(pitch) {
    if (width_ == 0 || height_ == 0) throw Error(ErrorKind::InvalidArgument, "image has no pixels");
    if (values_.size() != width_ * height_)
        throw Error(ErrorKind::InvalidArgument, "intensity count does not match width * height");
    if (!(pitch_ > 0.0) || !std::isfinite(pitch_))
        throw Error(ErrorKind::InvalidArgument, "pixel pitch must be positive");
    for (double v : values_)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw Error(ErrorKind::InvalidArgument, "intensities must be finite and nonnegative");
}

Complex GreyImage::world_position(std::size_t col, std::size_t row) const noexcept {
    return {pitch_ * (static_cast<double>(col) - 0.5 * static_cast<double>(width_ - 1)),
            pitch_ * (0.5 * static_cast<double>(height_ - 1) - static_cast<double>(row))};
}

Complex GreyImage::frame_position(std::size_t col, std::size_t row) const noexcept {
    return (world_position(col, row) - frame_.origin) / frame_.scale;
}

GreyImage GreyImage::with_frame(const ImageFrame& frame) const {
    if (!(frame.scale > 0.0) || !std::isfinite(frame.scale))
        throw Error(ErrorKind::InvalidArgument, "frame scale must be positive");
    GreyImage out(*this);
    out.frame_ = frame;
    return out;
}

GreyImage center_image(const GreyImage& img) {
    const GreyImage world = img.with_frame({});
    const auto m = kernels::parallel::lattice_moments(lattice_of(world), 1);
    if (!(m[0].real() > 0.0)) throw Error(ErrorKind::ZeroMass, "image has no intensity");
    const Complex centroid = m[1] / m[0].real();

    kernels::CompensatedSum spread;
    for (std::size_t r = 0; r < img.height(); ++r)
        for (std::size_t c = 0; c < img.width(); ++c)
            if (const double g = img.at(c, r); g != 0.0)
                spread.add(g * std::norm(world.world_position(c, r) - centroid));
    const double mean_sq = spread.value() * img.pitch() * img.pitch() / m[0].real();
    if (!(mean_sq > 0.0))
        throw Error(ErrorKind::ZeroMass, "image intensity is concentrated in a single point");
    return img.with_frame({centroid, std::sqrt(mean_sq), true});
}

GreyImage subtract_minimum(const GreyImage& img) {
    const auto values = img.intensities();
    const double low = *std::min_element(values.begin(), values.end());
    std::vector<double> out(values.begin(), values.end());
    for (auto& v : out) v = std::max(v - low, 0.0);
    return GreyImage(img.width(), img.height(), std::move(out), img.pitch()).with_frame(img.frame());
}

double image_mass(const GreyImage& img) {
    kernels::CompensatedSum acc;
    for (double v : img.intensities()) acc.add(v);
    const double step = img.pitch() / img.frame().scale;
    return acc.value() * step * step;
}

MomentSpectrum image_moments(const GreyImage& img, int max_order) {
    if (max_order < 1) throw Error(ErrorKind::InvalidArgument, "max order must be at least 1");
    auto m = kernels::parallel::lattice_moments(lattice_of(img), max_order);
    m.erase(m.begin());
    return MomentSpectrum(MomentKind::PowerSum, std::move(m));
}

GreyImage rotate_image(const GreyImage& img, double phi) {
    if (phi == 0.0) return img;
    const std::size_t w = img.width();
    const std::size_t h = img.height();

    if (const int turns = quarter_turns(phi);
        turns >= 0 && w == h && img.frame().origin == Complex{}) {
        std::vector<double> values(img.intensities().begin(), img.intensities().end());
        for (int t = 0; t < turns; ++t) values = quarter_turn(values, w);
        return GreyImage(w, h, std::move(values), img.pitch()).with_frame(img.frame());
    }

    // Inverse map each output pixel center into the source grid.
    const Complex origin = img.frame().origin;
    const Complex back = std::polar(1.0, -phi);
    const double cx = 0.5 * static_cast<double>(w - 1);
    const double cy = 0.5 * static_cast<double>(h - 1);
    auto sample = [&](long c, long r) {
        if (c < 0 || r < 0 || c >= static_cast<long>(w) || r >= static_cast<long>(h)) return 0.0;
        return img.at(static_cast<std::size_t>(c), static_cast<std::size_t>(r));
    };
    std::vector<double> out(w * h);
#pragma omp parallel for schedule(static)
    for (long r = 0; r < static_cast<long>(h); ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            const Complex q =
                origin + (img.world_position(c, static_cast<std::size_t>(r)) - origin) * back;
            const double sc = q.real() / img.pitch() + cx;
            const double sr = cy - q.imag() / img.pitch();
            const double c0 = std::floor(sc);
            const double r0 = std::floor(sr);
            const double fc = sc - c0;
            const double fr = sr - r0;
            const auto ic = static_cast<long>(c0);
            const auto ir = static_cast<long>(r0);
            out[static_cast<std::size_t>(r) * w + c] =
                (1.0 - fr) * ((1.0 - fc) * sample(ic, ir) + fc * sample(ic + 1, ir)) +
                fr * ((1.0 - fc) * sample(ic, ir + 1) + fc * sample(ic + 1, ir + 1));
        }
    }
    return GreyImage(w, h, std::move(out), img.pitch()).with_frame(img.frame());
}

OrientationEstimate orient_image(const GreyImage& img, const PmaOptions& options) {
    if (options.max_order < 1) throw Error(ErrorKind::InvalidArgument, "max order must be at least 1");
    const double mass = image_mass(img);
    if (!(mass > 0.0)) throw Error(ErrorKind::ZeroMass, "image has no intensity");
    const auto lattice = lattice_of(img);
    const auto sums = kernels::parallel::lattice_moments(lattice, options.max_order);
    const auto spectrum = condition_power_sums(std::span(sums).subspan(1), mass, options,
                                               img.frame().centered);
    // An image has no powered form; the contracted spectrum reads mu_{gamma k} directly.
    auto contracted = [&](int gamma) {
        const auto all = kernels::parallel::lattice_moments(lattice, gamma * options.max_order);
        std::vector<Complex> picked(static_cast<std::size_t>(options.max_order));
        for (int k = 1; k <= options.max_order; ++k) picked[k - 1] = all[gamma * k];
        return condition_power_sums(picked, mass, options, false);
    };
    return orient_spectrum(spectrum, contracted, false);
}

}  // namespace pmshape
