/**
 * @file bandwidth.hpp
 * @brief How many Principal Moments a shape of N landmarks needs.
 *
 * For a normalized shape |M_k| <= b(k) = N^{k/2 - 1} / k!. Its logarithm with
 * Stirling's approximation,
 *
 *   B(k) = k (ln N / 2 + 1) - k ln k - (1/2) ln k - ln N - (1/2) ln 2 pi,
 *
 * has one maximum k2 > 1/2 and decreases to -inf after it. The bandwidth k_B
 * is the first integer past the root of B(k) = ln p on [k2, inf): every
 * moment from k_B on is below p relative to M_0 = 1.
 */
#pragma once

#include <pmshape/types.hpp>

#include <vector>

namespace pmshape {

struct BandwidthReport {
    int n = 0;
    double p = 0.0;
    double k2 = 0.0;  ///< right extremum of B
    int kb = 0;       ///< smallest integer >= the root of B(k) = ln p past k2
};

struct CompactDescriptor {
    std::vector<Complex> coefficients;  ///< M_0 .. M_{kB-1}
    int n = 0;
    double p = 0.0;
};

/// b(k, N) = N^{k/2-1} / k!, evaluated with an exact log-factorial. k, N >= 1.
double bound_b(int k, int n);

/// ln b(k, N) with the exact log-factorial.
double log_bound_exact(int k, int n);

/// Stirling form B(k) on real k > 0.
double log_bound_B(double k, int n);
/// B'(k) = ln N / 2 - ln k - 1/(2k).
double log_bound_B_prime(double k, int n);
/// B''(k) = -1/k + 1/(2k^2).
double log_bound_B_second(double k) noexcept;

/**
 * @brief Two-step bisection: B'(k) = 0 on [1/2, inf) gives k2, then
 *        B(k) = ln p on [k2, inf) gives k_B.
 *
 * Requires N >= 2 and 0 < p < 1. If B(k2) is already at or below ln p the
 * root is k2 itself.
 */
BandwidthReport solve_kb(int n, double p);

inline constexpr double kBisectionTolerance = 1e-9;

/// M_0 .. M_{kB-1} of a normalized shape, kB = solve_kb(N, p).kb.
CompactDescriptor compact_descriptor(const NormalizedShape& z, double p);

/// Euclidean distance after zero-padding the shorter coefficient sequence.
double descriptor_distance(const CompactDescriptor& a, const CompactDescriptor& b);

}  // namespace pmshape
