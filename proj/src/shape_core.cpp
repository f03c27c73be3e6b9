#include <pmshape/shape_core.hpp>

#include <pmshape/error.hpp>
#include <pmshape/kernels.hpp>

#include "kernels_detail.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace pmshape {

namespace {

void require_order(int max_order) {
    if (max_order < 1) throw Error(ErrorKind::InvalidArgument, "max order must be at least 1");
}

MomentSpectrum scale_to_principal(const MomentSpectrum& sums, std::size_t n) {
    std::vector<Complex> out(sums.values().begin(), sums.values().end());
    double factorial = 1.0;
    const auto count = static_cast<double>(n);
    for (std::size_t k = 0; k < out.size(); ++k) {
        factorial *= static_cast<double>(k + 1);
        out[k] /= count * factorial;
    }
    return MomentSpectrum(MomentKind::Principal, std::move(out));
}

}  // namespace

NormalizedShape normalize_shape(const ShapeVector& z) {
    const auto n = static_cast<double>(z.size());
    const Complex mean = kernels::parallel::sum(z.landmarks()) / n;

    kernels::CompensatedSum energy;
    for (const Complex& p : z) energy.add(std::norm(p - mean));
    const double scale = std::sqrt(energy.value() / n);
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw Error(ErrorKind::DegenerateShape, "all landmarks coincide");

    std::vector<Complex> w(z.size());
    std::transform(z.begin(), z.end(), w.begin(), [&](Complex p) { return (p - mean) / scale; });
    return NormalizedShape(ShapeVector(std::move(w)), mean, scale);
}

MomentSpectrum power_sums(const ShapeVector& z, int max_order) {
    require_order(max_order);
    return MomentSpectrum(MomentKind::PowerSum,
                          kernels::parallel::power_sums(z.landmarks(), max_order));
}

MomentSpectrum power_sums(const NormalizedShape& z, int max_order) {
    return power_sums(z.shape(), max_order);
}

MomentSpectrum principal_moments(const ShapeVector& z, int max_order) {
    return scale_to_principal(power_sums(z, max_order), z.size());
}

MomentSpectrum principal_moments(const NormalizedShape& z, int max_order) {
    return principal_moments(z.shape(), max_order);
}

Complex complex_moment(const ShapeVector& z, int p, int q) {
    if (p < 0 || q < 0) throw Error(ErrorKind::InvalidArgument, "moment orders must be nonnegative");
    // Same power chain and block layout as the power-sum kernel, so C_k0 == mu_k bit for bit.
    std::vector<Complex> terms(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Complex base = z[i];
        Complex term{1.0, 0.0};
        if (p > 0) {
            term = base;
            for (int e = 1; e < p; ++e) term = kernels::detail::mul(term, base);
        }
        if (q > 0) {
            const Complex cbase = std::conj(base);
            Complex c = cbase;
            for (int e = 1; e < q; ++e) c = kernels::detail::mul(c, cbase);
            term = kernels::detail::mul(term, c);
        }
        terms[i] = term;
    }
    return kernels::parallel::sum(terms);
}

Complex gc_moment(const ShapeVector& z, int p, int q) {
    if (p < 0 || q < 1) throw Error(ErrorKind::InvalidArgument, "gc moment needs p >= 0, q >= 1");
    std::vector<Complex> terms(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double radius = std::pow(std::abs(z[i]), p);
        const double angle = z[i] == Complex{} ? 0.0 : principal_arg(z[i]);
        terms[i] = std::polar(radius, q * angle);
    }
    return kernels::parallel::sum(terms);
}

Complex ansig_at(const ShapeVector& z, double theta) {
    const Complex e = std::polar(1.0, theta);
    kernels::ComplexAccumulator acc;
    for (const Complex& p : z) acc.add(std::exp(p * e));
    return acc.value() / static_cast<double>(z.size());
}

std::vector<Complex> ansig_circle(const ShapeVector& z, int samples) {
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
    std::vector<Complex> out(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) out[s] = ansig_at(z, kTwoPi * s / samples);
    return out;
}

std::vector<Complex> reconstruct_landmarks(const MomentSpectrum& sums, int n) {
    if (sums.kind() != MomentKind::PowerSum)
        throw Error(ErrorKind::InvalidArgument, "reconstruction needs power sums");
    if (n < 1 || n > kMaxReconstructionSize)
        throw Error(ErrorKind::InvalidArgument,
                    "reconstruction supports 1 <= N <= " + std::to_string(kMaxReconstructionSize));
    if (sums.max_order() < n)
        throw Error(ErrorKind::InvalidArgument, "spectrum must cover orders 1..N");

    // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        Complex acc{};
        double sign = 1.0;
        for (int i = 1; i <= k; ++i) {
            acc += sign * e[k - i] * sums.at(i);
            sign = -sign;
        }
        e[k] = acc / static_cast<double>(k);
    }

    // Monic t^n + c_{n-1} t^{n-1} + ... + c_0 with c_{n-i} = (-1)^i e_i.
    std::vector<Complex> c(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) c[n - i] = (i % 2 == 0 ? 1.0 : -1.0) * e[i];

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::IllConditioned, "companion eigenvalue iteration did not converge");

    auto poly = [&](Complex t, Complex& derivative) {
        Complex value{1.0, 0.0};
        derivative = 0.0;
        for (int i = n - 1; i >= 0; --i) {
            derivative = derivative * t + value;
            value = value * t + c[i];
        }
        return value;
    };

    std::vector<Complex> roots(static_cast<std::size_t>(n));
    double radius = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex r = solver.eigenvalues()[i];
        for (int step = 0; step < 3; ++step) {
            Complex d;
            const Complex f = poly(r, d);
            if (d == Complex{}) break;
            const Complex next = r - f / d;
            Complex unused;
            if (std::abs(poly(next, unused)) >= std::abs(f)) break;
            r = next;
        }
        roots[i] = r;
        radius = std::max(radius, std::abs(r));
    }

    // Relative power-sum reproduction error, scaled by the natural size n r^k.
    double residual = 0.0;
    Complex unused;
    const auto check = kernels::serial::power_sums(roots, n);
    for (int k = 1; k <= n; ++k) {
        const double size = radius > 0.0 ? n * std::pow(radius, k) : 1.0;
        residual = std::max(residual, std::abs(check[k - 1] - sums.at(k)) / size);
    }
    if (!(residual <= kReconstructionResidual))
        throw Error(ErrorKind::IllConditioned,
                    "recovered roots reproduce the power sums with relative residual " +
                        std::to_string(residual));
    return roots;
}

}  // namespace pmshape
