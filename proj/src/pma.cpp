#include <pmshape/pma.hpp>

#include <pmshape/error.hpp>
#include <pmshape/kernels.hpp>
#include <pmshape/shape_core.hpp>

#include "kernels_detail.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pmshape {

namespace {

void require_valid(const PmaOptions& options) {
    if (options.max_order < 1) throw Error(ErrorKind::InvalidArgument, "max order must be at least 1");
    if (!(options.threshold >= 0.0) || !std::isfinite(options.threshold))
        throw Error(ErrorKind::InvalidArgument, "threshold must be finite and nonnegative");
}

Complex condition_one(Complex mu, int k, double mass, double log_factorial, Conditioning how) {
    if (mu == Complex{}) return {};
    switch (how) {
        case Conditioning::PrincipalMoment:
            return mu / std::exp(std::log(mass) + log_factorial);
        case Conditioning::PowerNormalized: {
            // |mu|^{1-k}, capped so that rounding-level moments stay finite.
            const double log_mag = std::min((1.0 - k) * std::log(std::abs(mu)), 700.0);
            return std::polar(std::exp(log_mag), principal_arg(mu));
        }
        case Conditioning::ExpectedGrowth:
            return mu / std::exp(0.5 * (std::log(mass) + log_factorial));
    }
    return {};
}

}  // namespace

Complex ConditionedSpectrum::at(int k) const {
    if (k < 1 || k > max_order())
        throw Error(ErrorKind::InvalidArgument, "order " + std::to_string(k) + " out of range");
    return values[static_cast<std::size_t>(k - 1)];
}

bool ConditionedSpectrum::is_nonzero(int k) const noexcept {
    return std::binary_search(nonzero.begin(), nonzero.end(), k);
}

ConditionedSpectrum condition_power_sums(std::span<const Complex> power_sums, double mass,
                                         const PmaOptions& options, bool centered) {
    require_valid(options);
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw Error(ErrorKind::InvalidArgument, "conditioning mass must be positive");
    ConditionedSpectrum out;
    out.threshold = options.threshold;
    out.values.resize(power_sums.size());
    double log_factorial = 0.0;
    for (std::size_t i = 0; i < power_sums.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        log_factorial += std::log(static_cast<double>(k));
        out.values[i] = condition_one(power_sums[i], k, mass, log_factorial, options.conditioning);
        if (k == 1 && centered) continue;
        if (std::abs(out.values[i]) > options.threshold) out.nonzero.push_back(k);
    }
    return out;
}

ConditionedSpectrum condition_moments(const NormalizedShape& z, const PmaOptions& options) {
    require_valid(options);
    const auto sums = kernels::parallel::power_sums(z.landmarks(), options.max_order);
    return condition_power_sums(sums, static_cast<double>(z.size()), options, true);
}

ConditionedSpectrum condition_moments(const ShapeVector& z, const PmaOptions& options) {
    require_valid(options);
    const auto sums = kernels::parallel::power_sums(z.landmarks(), options.max_order);
    return condition_power_sums(sums, static_cast<double>(z.size()), options, false);
}

int fold_number(std::span<const int> orders) {
    int g = 0;
    for (int k : orders) g = std::gcd(g, k);
    return g;
}

ShapeVector contract_shape(const NormalizedShape& z, int gamma) {
    if (gamma < 1) throw Error(ErrorKind::InvalidArgument, "fold number must be positive");
    std::vector<Complex> out(z.landmarks().begin(), z.landmarks().end());
    for (auto& w : out) {
        const Complex base = w;
        for (int e = 1; e < gamma; ++e) w = kernels::detail::mul(w, base);
    }
    return ShapeVector(std::move(out));
}

double pair_phase(const ConditionedSpectrum& spectrum, int k, int m, int l) {
    const double ratio = static_cast<double>(m) / k;
    return wrap_angle(principal_arg(spectrum.at(m)) - ratio * principal_arg(spectrum.at(k)) -
                      ratio * kTwoPi * l);
}

bool in_pair_interval(double nu, int k) noexcept {
    // Near-boundary phases count as the closed end, so both ends round the same way.
    const double half = kPi / k;
    return nu > -half + kIntervalSlack && nu <= half + kIntervalSlack;
}

PairEstimate pair_orientation(const ConditionedSpectrum& spectrum, int k, int m) {
    if (k < 1 || m < 1 || std::gcd(k, m) != 1)
        throw Error(ErrorKind::InvalidArgument, "pair orders must be coprime positive integers");
    if (!spectrum.is_nonzero(k) || !spectrum.is_nonzero(m))
        throw Error(ErrorKind::InvalidArgument, "pair orders must both be nonzero");
    const Complex mu_k = spectrum.at(k);
    const Complex mu_m = spectrum.at(m);
    for (int l = 0; l < k; ++l) {
        if (!in_pair_interval(pair_phase(spectrum, k, m, l), k)) continue;
        return PairEstimate{k, m, l, wrap_angle(principal_arg(mu_k) / k + kTwoPi * l / k),
                            std::abs(mu_k) * std::abs(mu_m)};
    }
    throw Error(ErrorKind::Internal, "no candidate angle falls in the pair interval");
}

std::vector<std::pair<int, int>> select_pairs(std::span<const int> nonzero) {
    std::vector<int> sorted(nonzero.begin(), nonzero.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, int>> pairs;
    for (int k : sorted) {
        for (int m : sorted) {
            if (m != k && std::gcd(k, m) == 1) {
                pairs.emplace_back(k, m);
                break;
            }
        }
    }
    return pairs;
}

double angular_mean(std::span<const double> angles, std::span<const double> weights) {
    if (angles.size() != weights.size() || angles.empty())
        throw Error(ErrorKind::InvalidArgument, "angles and weights must be non-empty and equal length");
    kernels::ComplexAccumulator resultant;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
            throw Error(ErrorKind::InvalidArgument, "weights must be finite and nonnegative");
        resultant.add(std::polar(weights[i], angles[i]));
    }
    const Complex r = resultant.value();
    if (std::abs(r) < kMinResultant) throw Error(ErrorKind::ZeroResultant, "weighted angles cancel");
    return principal_arg(r);
}

OrientationEstimate orient_spectrum(const ConditionedSpectrum& spectrum,
                                    const ContractedSpectrum& contracted, bool exact_fold) {
    if (spectrum.nonzero.empty())
        throw Error(ErrorKind::AllMomentsZero, "no moment exceeds the threshold");

    OrientationEstimate out;
    out.orders = spectrum.nonzero;
    out.gamma = fold_number(spectrum.nonzero);

    ConditionedSpectrum reduced;
    const ConditionedSpectrum* work = &spectrum;
    if (out.gamma > 1) {
        reduced = contracted(out.gamma);
        work = &reduced;
        if (reduced.nonzero.empty())
            throw Error(ErrorKind::AllMomentsZero, "no moment of the contracted input exceeds the threshold");
    }

    auto pairs = select_pairs(work->nonzero);
    if (pairs.empty() && exact_fold && work->nonzero == std::vector<int>{1}) pairs.emplace_back(1, 1);
    if (pairs.empty())
        throw Error(ErrorKind::DegenerateSpectrum, "no coprime pair of nonzero moment orders");

    std::vector<double> angles;
    std::vector<double> weights;
    for (auto [k, m] : pairs) {
        out.pairs.push_back(pair_orientation(*work, k, m));
        angles.push_back(out.pairs.back().theta);
        weights.push_back(out.pairs.back().weight);
    }
    out.theta = angular_mean(angles, weights) / out.gamma;
    return out;
}

OrientationEstimate orientation(const NormalizedShape& z, const PmaOptions& options) {
    const auto spectrum = condition_moments(z, options);
    return orient_spectrum(
        spectrum, [&](int gamma) { return condition_moments(contract_shape(z, gamma), options); },
        true);
}

OrientationEstimate orientation(const ShapeVector& z, const PmaOptions& options) {
    return orientation(normalize_shape(z), options);
}

NormalizedShape orient_shape(const ShapeVector& z, const PmaOptions& options) {
    const auto w = normalize_shape(z);
    return w.rotated(-orientation(w, options).theta);
}

}  // namespace pmshape
