// Shared helpers for the unit and acceptance tests.
#pragma once

#include <pmshape/random.hpp>
#include <pmshape/types.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pmshape::testing {

/// Largest distance of a greedy one-to-one matching between two point sets of
/// equal size. A small value proves a matching within that distance exists.
inline double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& p : a) {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(p - b[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

/// Brace-list shorthand; ShapeVector({...}) is ambiguous with the copy constructor.
inline ShapeVector make_shape(std::vector<Complex> z) { return ShapeVector(std::move(z)); }

/// Random shape with n standard circular Gaussian landmarks.
inline ShapeVector random_shape(RandomStream& rng, std::size_t n) {
    std::vector<Complex> z(n);
    for (auto& p : z) p = rng.complex_normal();
    return ShapeVector(std::move(z));
}

/// Uniform angle in (-pi, pi].
inline double random_angle(RandomStream& rng) { return kPi - kTwoPi * rng.uniform(); }

/// Brute-force DFT coefficient (1/S) sum_s x_s e^{-j 2 pi k s / S}.
inline Complex dft_coefficient(std::span<const Complex> x, int k) {
    Complex acc{};
    const auto s_count = static_cast<double>(x.size());
    for (std::size_t s = 0; s < x.size(); ++s)
        acc += x[s] * std::polar(1.0, -kTwoPi * k * static_cast<double>(s) / s_count);
    return acc / s_count;
}

/// Composite Simpson rule on [a, b] with an even number of intervals.
template <class F>
double simpson(F&& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

}  // namespace pmshape::testing
