// Block-level building blocks shared by the serial and OpenMP kernels. Both
// front ends call exactly these functions on exactly the same blocks, which is
// what makes their results bit-identical.
#pragma once

#include <pmshape/kernels.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace pmshape::kernels::detail {

/// Plain complex product; avoids the NaN-recovery path of std::complex.
inline Complex mul(Complex a, Complex b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline std::size_t block_count(std::size_t n) noexcept {
    return (n + kLandmarkBlock - 1) / kLandmarkBlock;
}

inline ComplexAccumulator sum_block(std::span<const Complex> terms, std::size_t block) noexcept {
    const std::size_t lo = block * kLandmarkBlock;
    const std::size_t hi = std::min(terms.size(), lo + kLandmarkBlock);
    ComplexAccumulator acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(terms[i]);
    return acc;
}

/// acc[k-1] += z^k over the block, running powers per landmark.
inline void power_sum_block(std::span<const Complex> z, std::size_t block, int max_order,
                            std::span<ComplexAccumulator> acc) noexcept {
    const std::size_t lo = block * kLandmarkBlock;
    const std::size_t hi = std::min(z.size(), lo + kLandmarkBlock);
    for (std::size_t i = lo; i < hi; ++i) {
        const Complex base = z[i];
        Complex w = base;
        for (int k = 0; k < max_order; ++k) {
            acc[k].add(w);
            w = mul(w, base);
        }
    }
}

/// acc[k] += w^k g over one image row, k = 0..max_order.
inline void lattice_row(const PixelLattice& lattice, std::size_t row, int max_order,
                        std::span<ComplexAccumulator> acc) noexcept {
    const double y = lattice.origin.imag() - lattice.step * static_cast<double>(row);
    const double* g = lattice.intensities.data() + row * lattice.width;
    for (std::size_t col = 0; col < lattice.width; ++col) {
        const double v = g[col];
        if (v == 0.0) continue;
        const Complex base{lattice.origin.real() + lattice.step * static_cast<double>(col), y};
        Complex w{v, 0.0};
        acc[0].add(w);
        for (int k = 1; k <= max_order; ++k) {
            w = mul(w, base);
            acc[k].add(w);
        }
    }
}

inline std::vector<Complex> finish(std::span<const ComplexAccumulator> acc, double factor) {
    std::vector<Complex> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = acc[k].value() * factor;
    return out;
}

}  // namespace pmshape::kernels::detail
