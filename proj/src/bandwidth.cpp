#include <pmshape/bandwidth.hpp>

#include <pmshape/error.hpp>
#include <pmshape/shape_core.hpp>

#include <algorithm>
#include <cmath>

namespace pmshape {

namespace {

double log_factorial(int k) noexcept {
    double acc = 0.0;
    for (int i = 2; i <= k; ++i) acc += std::log(static_cast<double>(i));
    return acc;
}

void require_positive(int k, int n) {
    if (k < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "bound needs k >= 1 and N >= 1");
}

}  // namespace

double log_bound_exact(int k, int n) {
    require_positive(k, n);
    return (0.5 * k - 1.0) * std::log(static_cast<double>(n)) - log_factorial(k);
}

double bound_b(int k, int n) { return std::exp(log_bound_exact(k, n)); }

double log_bound_B(double k, int n) {
    const double ln_n = std::log(static_cast<double>(n));
    return k * (0.5 * ln_n + 1.0) - k * std::log(k) - 0.5 * std::log(k) - ln_n -
           0.5 * std::log(kTwoPi);
}

double log_bound_B_prime(double k, int n) {
    return 0.5 * std::log(static_cast<double>(n)) - std::log(k) - 0.5 / k;
}

double log_bound_B_second(double k) noexcept { return -1.0 / k + 0.5 / (k * k); }

BandwidthReport solve_kb(int n, double p) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "bandwidth needs N >= 2");
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::InvalidArgument, "threshold p must lie in (0, 1)");

    // B' > 0 at 1/2 for every N >= 2 and decreases from there on.
    double lo = 0.5;
    double hi = 1.0;
    while (log_bound_B_prime(hi, n) >= 0.0) hi *= 2.0;
    while (hi - lo > kBisectionTolerance) {
        const double mid = 0.5 * (lo + hi);
        (log_bound_B_prime(mid, n) > 0.0 ? lo : hi) = mid;
    }
    const double k2 = 0.5 * (lo + hi);

    const double target = std::log(p);
    BandwidthReport report{n, p, k2, 0};
    if (log_bound_B(k2, n) <= target) {
        report.kb = static_cast<int>(std::ceil(k2));
        return report;
    }
    lo = k2;
    hi = 2.0 * k2;
    while (log_bound_B(hi, n) > target) hi *= 2.0;
    while (hi - lo > kBisectionTolerance) {
        const double mid = 0.5 * (lo + hi);
        (log_bound_B(mid, n) > target ? lo : hi) = mid;
    }
    // hi sits at or past the root, and B decreases there, so B(ceil(hi)) <= ln p.
    report.kb = static_cast<int>(std::ceil(hi));
    return report;
}

CompactDescriptor compact_descriptor(const NormalizedShape& z, double p) {
    const int kb = solve_kb(static_cast<int>(z.size()), p).kb;
    CompactDescriptor out{{Complex{1.0, 0.0}}, static_cast<int>(z.size()), p};
    if (kb > 1) {
        const auto pm = principal_moments(z, kb - 1);
        out.coefficients.insert(out.coefficients.end(), pm.values().begin(), pm.values().end());
    }
    return out;
}

double descriptor_distance(const CompactDescriptor& a, const CompactDescriptor& b) {
    const auto& x = a.coefficients;
    const auto& y = b.coefficients;
    const std::size_t len = std::max(x.size(), y.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const Complex u = i < x.size() ? x[i] : Complex{};
        const Complex v = i < y.size() ? y[i] : Complex{};
        acc += std::norm(u - v);
    }
    return std::sqrt(acc);
}

}  // namespace pmshape
