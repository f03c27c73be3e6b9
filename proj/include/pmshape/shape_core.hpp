/**
 * @file shape_core.hpp
 * @brief Principal Moments of unlabeled point sets and the classical moments
 *        they generalize.
 *
 * For a shape z = [z_1 .. z_N] the k-th power sum is mu_k = sum_n z_n^k and
 * the k-th Principal Moment is M_k = mu_k / (N k!). M_0 = 1 for every shape
 * and M_1 = 0 once the shape is centered. The first N power sums determine
 * the landmarks up to permutation (reconstruct_landmarks() inverts them).
 *
 * The M_k are also the Fourier-series coefficients of the analytic signature
 * restricted to the unit circle, h(theta) = (1/N) sum_n exp(z_n e^{j theta}),
 * which ansig_circle() samples.
 *
 * Angles follow the (-pi, pi] convention of principal_arg() throughout.
 */
#pragma once

#include <pmshape/types.hpp>

#include <vector>

namespace pmshape {

/**
 * @brief Removes translation and scale: w = sqrt(N) (z - mean) / ||z - mean||.
 * @throws Error(DegenerateShape) when every landmark coincides.
 */
NormalizedShape normalize_shape(const ShapeVector& z);

/// mu_k = sum_n z_n^k for k = 1..max_order.
MomentSpectrum power_sums(const ShapeVector& z, int max_order);
MomentSpectrum power_sums(const NormalizedShape& z, int max_order);

/// M_k = mu_k / (N k!) for k = 1..max_order.
MomentSpectrum principal_moments(const ShapeVector& z, int max_order);
MomentSpectrum principal_moments(const NormalizedShape& z, int max_order);

/// C_pq = sum_n z_n^p conj(z_n)^q. C_k0 equals the power sum mu_k bit for bit.
Complex complex_moment(const ShapeVector& z, int p, int q);

/**
 * @brief GC_pq = sum_n |z_n|^p e^{j q arg z_n}, q >= 1.
 *
 * A landmark at the origin has arg 0: it contributes 0 for p >= 1 and 1 for
 * p = 0.
 */
Complex gc_moment(const ShapeVector& z, int p, int q);

/// S samples of h(z, theta) at theta_s = 2 pi s / S.
std::vector<Complex> ansig_circle(const ShapeVector& z, int samples);

/// h(z, theta) at a single angle.
Complex ansig_at(const ShapeVector& z, double theta);

/**
 * @brief Recovers N landmarks from the power sums mu_1..mu_N.
 *
 * Newton's identities give the elementary symmetric polynomials, which are
 * the (signed) coefficients of the monic polynomial with the landmarks as
 * roots; the roots are the eigenvalues of its companion matrix.
 *
 * Limited to N <= 10: beyond that the root sensitivity makes the result
 * meaningless as an oracle.
 *
 * @throws Error(IllConditioned) when the recovered roots reproduce the input
 *         power sums with relative residual above 1e-4.
 */
std::vector<Complex> reconstruct_landmarks(const MomentSpectrum& power_sums, int n);

inline constexpr int kMaxReconstructionSize = 10;
inline constexpr double kReconstructionResidual = 1e-4;

}  // namespace pmshape
