/**
 * @file pma.hpp
 * @brief Principal Moment Analysis: a rotation angle theta(z) for any shape
 *        with theta(z e^{j phi}) = theta(z) + phi (mod 2 pi / gamma).
 *
 * A single power sum mu_k fixes the orientation only up to 2 pi / k. A second
 * nonzero moment mu_m with gcd(k, m) = 1 removes the ambiguity: among the k
 * candidates theta_l = arg(mu_k)/k + 2 pi l / k, exactly one leaves the phase
 *
 *   nu(l) = arg mu_m - (m/k) arg mu_k - (m/k) 2 pi l
 *
 * inside the fixed interval I = (-pi/k, pi/k] (mod 2 pi). Each such pair gives
 * an estimate; the estimates are combined by a weighted circular mean.
 *
 * When every nonzero order is a multiple of gamma > 1 the shape has gamma-fold
 * rotational symmetry. The analysis then runs on the powered shape z^gamma and
 * the resulting angle is divided by gamma.
 */
#pragma once

#include <pmshape/types.hpp>

#include <functional>
#include <span>
#include <vector>

namespace pmshape {

/// Magnitude normalization applied to mu_k before thresholding.
enum class Conditioning {
    /// mu_k / (mass k!): the Principal Moment itself (mass = N for point sets).
    PrincipalMoment,
    /// mu_k / |mu_k|^k, i.e. magnitude |mu_k|^{1-k}.
    PowerNormalized,
    /// mu_k / sqrt(mass k!): divides by the expected magnitude of a random
    /// circular Gaussian shape with unit RMS radius.
    ExpectedGrowth,
};

struct PmaOptions {
    int max_order = 20;
    double threshold = 1e-3;
    Conditioning conditioning = Conditioning::PrincipalMoment;
};

/// Conditioned moments mu^_k for k = 1..K and the orders that pass |mu^_k| > tau.
struct ConditionedSpectrum {
    std::vector<Complex> values;  ///< index k-1; exactly 0 where mu_k == 0
    std::vector<int> nonzero;     ///< ascending
    double threshold = 0.0;

    [[nodiscard]] int max_order() const noexcept { return static_cast<int>(values.size()); }
    [[nodiscard]] Complex at(int k) const;
    [[nodiscard]] bool is_nonzero(int k) const noexcept;
};

/**
 * @brief Conditions raw power sums mu_1..mu_K.
 * @param mass    mu_0 analogue: N for point sets, total |intensity| for images.
 * @param centered drop order 1 (its value is rounding noise after centering).
 */
ConditionedSpectrum condition_power_sums(std::span<const Complex> power_sums, double mass,
                                         const PmaOptions& options, bool centered);

/// Conditioned spectrum of a normalized shape. Order 1 is never nonzero.
ConditionedSpectrum condition_moments(const NormalizedShape& z, const PmaOptions& options = {});

/// Conditioned spectrum of an arbitrary (e.g. powered) shape; order 1 is kept.
ConditionedSpectrum condition_moments(const ShapeVector& z, const PmaOptions& options = {});

/// gcd of all orders; 0 for an empty set.
int fold_number(std::span<const int> orders);

/// [z_1^gamma, ..., z_N^gamma].
ShapeVector contract_shape(const NormalizedShape& z, int gamma);

struct PairEstimate {
    int k = 0;
    int m = 0;
    int l = 0;
    double theta = 0.0;   ///< in (-pi, pi]
    double weight = 0.0;  ///< |mu^_k mu^_m|
};

/// Left (open) end of I = (-pi/k, pi/k]. Fixed, not a tuning knob.
inline double interval_start(int k) noexcept { return -kPi / k; }

/// Slack on the open end of I that absorbs rounding in nu.
inline constexpr double kIntervalSlack = 1e-12;

/// nu(l) wrapped to (-pi, pi].
double pair_phase(const ConditionedSpectrum& spectrum, int k, int m, int l);

/// Whether a wrapped phase lies in (-pi/k, pi/k], with kIntervalSlack on the open end.
bool in_pair_interval(double nu, int k) noexcept;

/**
 * @brief Orientation from the coprime pair (k, m).
 * @throws Error(InvalidArgument) if gcd(k, m) != 1 or either order is not nonzero.
 * @throws Error(Internal) if no l hits I, which coprimality rules out.
 */
PairEstimate pair_orientation(const ConditionedSpectrum& spectrum, int k, int m);

/// For every nonzero k, the smallest nonzero m != k with gcd(k, m) = 1.
/// Orders without such a partner are skipped.
std::vector<std::pair<int, int>> select_pairs(std::span<const int> nonzero);

/**
 * @brief arg sum_i w_i e^{j theta_i}.
 * @throws Error(ZeroResultant) when the resultant magnitude is below 1e-12.
 */
double angular_mean(std::span<const double> angles, std::span<const double> weights);

inline constexpr double kMinResultant = 1e-12;

struct OrientationEstimate {
    double theta = 0.0;  ///< in (-pi/gamma, pi/gamma]; defined modulo 2 pi / gamma
    int gamma = 1;
    /// Pair estimates. For gamma > 1 the orders index the contracted spectrum,
    /// i.e. (k, m) stands for the original orders (gamma k, gamma m).
    std::vector<PairEstimate> pairs;
    std::vector<int> orders;  ///< nonzero orders of the uncontracted spectrum
};

/// Builds the conditioned spectrum of the gamma-contracted input.
using ContractedSpectrum = std::function<ConditionedSpectrum(int gamma)>;

/**
 * @brief The orientation pipeline after conditioning, shared by shapes and images.
 *
 * With exact_fold set (point sets, where gamma is the true fold number) a
 * contracted spectrum whose only nonzero order is 1 still fixes the angle
 * through the pair (1, 1). Images never set it: there a lone order is the
 * degenerate case.
 *
 * @throws Error(AllMomentsZero) when no order is nonzero.
 * @throws Error(DegenerateSpectrum) when no coprime pair of nonzero orders
 *         exists, even after contraction.
 */
OrientationEstimate orient_spectrum(const ConditionedSpectrum& spectrum,
                                    const ContractedSpectrum& contracted, bool exact_fold);

/// Full pipeline: normalize, condition, detect gamma, contract, pair, average.
OrientationEstimate orientation(const ShapeVector& z, const PmaOptions& options = {});
OrientationEstimate orientation(const NormalizedShape& z, const PmaOptions& options = {});

/// normalize_shape(z) e^{-j theta(z)}.
NormalizedShape orient_shape(const ShapeVector& z, const PmaOptions& options = {});

}  // namespace pmshape
