#include <pmshape/experiments.hpp>

#include <pmshape/error.hpp>
#include <pmshape/io.hpp>
#include <pmshape/kernels.hpp>
#include <pmshape/shape_core.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>

namespace pmshape {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool recoverable(ErrorKind kind) noexcept {
    return kind == ErrorKind::AllMomentsZero || kind == ErrorKind::DegenerateSpectrum ||
           kind == ErrorKind::ZeroResultant || kind == ErrorKind::AxisUndefined ||
           kind == ErrorKind::DegenerateShape;
}

double magnitude_distance(const CompactDescriptor& a, const CompactDescriptor& b) {
    const std::size_t len = std::max(a.coefficients.size(), b.coefficients.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double u = i < a.coefficients.size() ? std::abs(a.coefficients[i]) : 0.0;
        const double v = i < b.coefficients.size() ? std::abs(b.coefficients[i]) : 0.0;
        acc += (u - v) * (u - v);
    }
    return std::sqrt(acc);
}

// Independent streams per sweep step: drop, noise.
constexpr std::uint64_t kStreamsPerStep = 2;

}  // namespace

double pca_orientation(const NormalizedShape& z) {
    const Complex s = power_sums(z, 2).at(2);
    if (std::abs(s) < kPcaDegeneracy) throw Error(ErrorKind::AxisUndefined, "principal axis undefined");
    const double angle = 0.5 * principal_arg(s);
    return angle < 0.0 ? angle + kPi : angle;
}

ShapeVector add_noise(const ShapeVector& z, double sigma, std::uint64_t seed, std::uint64_t stream) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw Error(ErrorKind::InvalidArgument, "noise sigma must be finite and nonnegative");
    if (sigma == 0.0) return z;
    RandomStream rng(seed, stream);
    std::vector<Complex> out(z.begin(), z.end());
    for (auto& p : out) p += sigma * rng.complex_normal();
    return ShapeVector(std::move(out));
}

ShapeVector permute(const ShapeVector& z, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rng(seed, stream);
    const auto order = rng.permutation(z.size());
    std::vector<Complex> out(z.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = z[order[i]];
    return ShapeVector(std::move(out));
}

ShapeVector drop_landmarks(const ShapeVector& z, double fraction, std::uint64_t seed,
                           std::uint64_t stream) {
    if (!(fraction >= 0.0 && fraction <= 0.95))
        throw Error(ErrorKind::InvalidArgument, "drop fraction must lie in [0, 0.95]");
    const auto n = z.size();
    // n - floor(f n) rather than ceil((1 - f) n): 1 - f is inexact, f n rounds correctly at whole counts.
    const auto dropped = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n)));
    const std::size_t wanted = n - dropped;
    const std::size_t keep = std::min(n, std::max<std::size_t>(wanted, 3));
    if (keep == n) return z;
    RandomStream rng(seed, stream);
    auto order = rng.permutation(n);
    order.resize(keep);
    std::sort(order.begin(), order.end());
    std::vector<Complex> out(keep);
    for (std::size_t i = 0; i < keep; ++i) out[i] = z[order[i]];
    return ShapeVector(std::move(out));
}

ClassifierEntry prepare_entry(const ShapeVector& z, double p, const PmaOptions& options) {
    const auto w = normalize_shape(z);
    try {
        return {compact_descriptor(w.rotated(-orientation(w, options).theta), p), true};
    } catch (const Error& e) {
        if (!recoverable(e.kind())) throw;
        return {compact_descriptor(w, p), false};
    }
}

double entry_distance(const ClassifierEntry& a, const ClassifierEntry& b) {
    if (a.oriented && b.oriented) return descriptor_distance(a.descriptor, b.descriptor);
    return magnitude_distance(a.descriptor, b.descriptor);
}

NearestNeighborClassifier::NearestNeighborClassifier(std::vector<LabeledShape> prototypes, double p,
                                                     const PmaOptions& options)
    : p_(p), options_(options) {
    if (prototypes.empty()) throw Error(ErrorKind::InvalidArgument, "prototype set is empty");
    for (auto& proto : prototypes) {
        entries_.push_back(prepare_entry(proto.shape, p_, options_));
        labels_.push_back(std::move(proto.label));
    }
}

Classification NearestNeighborClassifier::classify(const ShapeVector& query) const {
    const auto entry = prepare_entry(query, p_, options_);
    Classification best{0, labels_[0], entry_distance(entry, entries_[0]), entry.oriented};
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        const double d = entry_distance(entry, entries_[i]);
        if (d < best.distance) {
            best.index = i;
            best.label = labels_[i];
            best.distance = d;
        }
    }
    return best;
}

Classification classify_1nn(const ShapeVector& query, const std::vector<LabeledShape>& prototypes,
                            double p, const PmaOptions& options) {
    return NearestNeighborClassifier(prototypes, p, options).classify(query);
}

std::vector<SweepRow> rotation_sweep(const ShapeVector& z, const ExperimentConfig& config,
                                     const PmaOptions& options) {
    if (config.sweep_steps < 1) throw Error(ErrorKind::InvalidArgument, "sweep needs at least one step");
    if (config.generator != kGeneratorName)
        throw Error(ErrorKind::InvalidArgument, "unsupported generator " + config.generator);
    const auto base = normalize_shape(z);

    double pma_base = kNaN;
    int gamma = 1;
    try {
        const auto est = orientation(base, options);
        pma_base = est.theta;
        gamma = est.gamma;
    } catch (const Error& e) {
        if (!recoverable(e.kind())) throw;
    }
    double pca_base = kNaN;
    try {
        pca_base = pca_orientation(base);
    } catch (const Error& e) {
        if (!recoverable(e.kind())) throw;
    }
    const double period = kTwoPi / gamma;

    std::vector<SweepRow> rows(static_cast<std::size_t>(config.sweep_steps));
    const std::int64_t steps = config.sweep_steps;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < steps; ++i) {
        const auto step = static_cast<std::uint64_t>(i);
        SweepRow row;
        row.gamma = gamma;
        row.true_angle = -kPi + kTwoPi * static_cast<double>(i + 1) / static_cast<double>(steps);

        ShapeVector s = base.shape();
        if (config.drop_fraction > 0.0)
            s = drop_landmarks(s, config.drop_fraction, config.seed, kStreamsPerStep * step);
        s = add_noise(s, config.noise_sigma, config.seed, kStreamsPerStep * step + 1).rotated(row.true_angle);

        row.pma_ok = row.pca_ok = false;
        row.pma_estimate = row.pca_estimate = row.pma_error = row.pca_error = kNaN;
        try {
            const auto w = normalize_shape(s);
            if (!std::isnan(pma_base)) {
                try {
                    row.pma_estimate = orientation(w, options).theta;
                    row.pma_error = std::abs(wrap_period(row.pma_estimate - row.true_angle - pma_base, period));
                    row.pma_ok = true;
                } catch (const Error&) {
                }
            }
            if (!std::isnan(pca_base)) {
                try {
                    row.pca_estimate = pca_orientation(w);
                    row.pca_error = std::abs(wrap_period(row.pca_estimate - row.true_angle - pca_base, period));
                    row.pca_ok = true;
                } catch (const Error&) {
                }
            }
        } catch (const Error&) {
        }
        rows[step] = row;
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "true_angle,pma,pca,err_pma,err_pca,gamma\n";
    for (const auto& r : rows)
        out << io::format_double(r.true_angle) << ',' << io::format_double(r.pma_estimate) << ','
            << io::format_double(r.pca_estimate) << ',' << io::format_double(r.pma_error) << ','
            << io::format_double(r.pca_error) << ',' << r.gamma << '\n';
}

std::vector<GrowthRow> power_sum_growth_mc(int n, double sigma, int k_max, int trials,
                                           std::uint64_t seed) {
    if (n < 1 || k_max < 1 || trials < 1)
        throw Error(ErrorKind::InvalidArgument, "growth experiment needs N, k_max, trials >= 1");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw Error(ErrorKind::InvalidArgument, "sigma must be finite and nonnegative");

    const auto orders = static_cast<std::size_t>(k_max);
    std::vector<double> energy(static_cast<std::size_t>(trials) * orders);
#pragma omp parallel for schedule(static)
    for (int t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        std::vector<Complex> z(static_cast<std::size_t>(n));
        for (auto& p : z) p = sigma * rng.complex_normal();
        const auto mu = kernels::serial::power_sums(z, k_max);
        for (std::size_t k = 0; k < orders; ++k) energy[static_cast<std::size_t>(t) * orders + k] = std::norm(mu[k]);
    }

    std::vector<GrowthRow> rows;
    double log_factorial = 0.0;
    for (std::size_t k = 0; k < orders; ++k) {
        kernels::CompensatedSum acc;
        for (int t = 0; t < trials; ++t) acc.add(energy[static_cast<std::size_t>(t) * orders + k]);
        const int order = static_cast<int>(k) + 1;
        log_factorial += std::log(static_cast<double>(order));
        const double mean = acc.value() / trials;
        double ratio = kNaN;
        if (sigma > 0.0) {
            const double log_expected =
                std::log(static_cast<double>(n)) + order * std::log(2.0 * sigma * sigma) + log_factorial;
            ratio = mean / std::exp(log_expected);
        }
        rows.push_back({order, ratio});
    }
    return rows;
}

void write_growth_csv(std::ostream& out, const std::vector<GrowthRow>& rows) {
    out << "k,ratio\n";
    for (const auto& r : rows) out << r.k << ',' << io::format_double(r.ratio) << '\n';
}

}  // namespace pmshape
