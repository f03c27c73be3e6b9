/**
 * @file experiments.hpp
 * @brief Experiment harness: PCA baseline, noise model, 1-NN classification,
 *        rotation sweeps and the power-sum growth Monte Carlo.
 *
 * All randomness comes from RandomStream keyed by (seed, trial index), so
 * every experiment is bit-reproducible and independent of thread count.
 */
#pragma once

#include <pmshape/bandwidth.hpp>
#include <pmshape/pma.hpp>
#include <pmshape/random.hpp>
#include <pmshape/types.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pmshape {

struct ExperimentConfig {
    std::uint64_t seed = 0;
    double noise_sigma = 0.0;  ///< per-coordinate, in units of the normalized shape
    int trials = 1;
    int sweep_steps = 72;
    double p = 0.1;
    double drop_fraction = 0.0;  ///< fraction of landmarks removed per sweep step, <= 0.95
    std::string generator{kGeneratorName};  ///< only Philox4x32-10 is implemented
};

/**
 * @brief Principal-axis angle (1/2) arg sum z_n^2, in [0, pi).
 * @throws Error(AxisUndefined) when |sum z_n^2| < 1e-9.
 */
double pca_orientation(const NormalizedShape& z);

inline constexpr double kPcaDegeneracy = 1e-9;

/// z_n + sigma (g1 + j g2), g standard normal drawn from stream (seed, stream).
ShapeVector add_noise(const ShapeVector& z, double sigma, std::uint64_t seed,
                      std::uint64_t stream = 0);

/// Applies a random permutation drawn from stream (seed, stream).
ShapeVector permute(const ShapeVector& z, std::uint64_t seed, std::uint64_t stream = 0);

/// Keeps a random subset of ceil((1 - fraction) N) landmarks, at least 3.
ShapeVector drop_landmarks(const ShapeVector& z, double fraction, std::uint64_t seed,
                           std::uint64_t stream = 0);

struct LabeledShape {
    std::string label;
    ShapeVector shape;
};

/**
 * @brief Shape prepared for nearest-neighbor comparison.
 *
 * Normally the compact descriptor of the PMA-oriented shape. If orientation
 * fails the descriptor is taken on the unrotated normalized shape and
 * comparisons involving it use coefficient magnitudes only.
 */
struct ClassifierEntry {
    CompactDescriptor descriptor;
    bool oriented = true;
};

ClassifierEntry prepare_entry(const ShapeVector& z, double p, const PmaOptions& options = {});

/// Descriptor distance, or magnitude-only distance if either side is unoriented.
double entry_distance(const ClassifierEntry& a, const ClassifierEntry& b);

struct Classification {
    std::size_t index = 0;
    std::string label;
    double distance = 0.0;
    bool oriented = true;
};

/// Prototype entries prepared once, queried many times.
class NearestNeighborClassifier {
public:
    NearestNeighborClassifier(std::vector<LabeledShape> prototypes, double p,
                              const PmaOptions& options = {});

    /// Ties go to the lowest prototype index.
    [[nodiscard]] Classification classify(const ShapeVector& query) const;
    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::vector<ClassifierEntry> entries_;
    double p_;
    PmaOptions options_;
};

/// One-shot form of NearestNeighborClassifier::classify.
Classification classify_1nn(const ShapeVector& query, const std::vector<LabeledShape>& prototypes,
                            double p, const PmaOptions& options = {});

struct SweepRow {
    double true_angle = 0.0;
    double pma_estimate = 0.0;  ///< NaN when PMA failed
    double pca_estimate = 0.0;  ///< NaN when the axis is undefined
    double pma_error = 0.0;     ///< |wrap_{2pi/gamma}(est - true - base)|, NaN on failure
    double pca_error = 0.0;     ///< same wrap applied to the PCA estimates, NaN on failure
    int gamma = 1;              ///< fold number of the noise-free shape
    bool pma_ok = true;
    bool pca_ok = true;
};

/**
 * @brief Rotation sweep over sweep_steps angles uniform in (-pi, pi].
 *
 * Step i normalizes z, optionally drops landmarks, adds noise, rotates by
 * the true angle and estimates the orientation with PMA and PCA. Errors are
 * measured against the estimates on the noise-free, unrotated shape.
 */
std::vector<SweepRow> rotation_sweep(const ShapeVector& z, const ExperimentConfig& config,
                                     const PmaOptions& options = {});

/// Frozen header: true_angle,pma,pca,err_pma,err_pca,gamma
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct GrowthRow {
    int k = 0;
    double ratio = 0.0;  ///< NaN when the expected value is 0 (sigma = 0)
};

/**
 * @brief mean |mu_k|^2 over i.i.d. circular Gaussian shapes divided by
 *        N (2 sigma^2)^k k!, for k = 1..k_max.
 */
std::vector<GrowthRow> power_sum_growth_mc(int n, double sigma, int k_max, int trials,
                                           std::uint64_t seed);

/// Frozen header: k,ratio
void write_growth_csv(std::ostream& out, const std::vector<GrowthRow>& rows);

}  // namespace pmshape
