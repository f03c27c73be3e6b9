#include <pmshape/kernels.hpp>

#include "kernels_detail.hpp"

#include <cmath>

namespace pmshape::kernels {

void CompensatedSum::add(double x) noexcept {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
        compensation += (sum - t) + x;
    else
        compensation += (x - t) + sum;
    sum = t;
}

void CompensatedSum::merge(const CompensatedSum& other) noexcept {
    add(other.sum);
    compensation += other.compensation;
}

namespace serial {

Complex sum(std::span<const Complex> terms) {
    ComplexAccumulator total;
    for (std::size_t b = 0; b < detail::block_count(terms.size()); ++b)
        total.merge(detail::sum_block(terms, b));
    return total.value();
}

std::vector<Complex> power_sums(std::span<const Complex> z, int max_order) {
    const auto orders = static_cast<std::size_t>(std::max(max_order, 0));
    std::vector<ComplexAccumulator> total(orders);
    std::vector<ComplexAccumulator> block(orders);
    for (std::size_t b = 0; b < detail::block_count(z.size()); ++b) {
        std::fill(block.begin(), block.end(), ComplexAccumulator{});
        detail::power_sum_block(z, b, max_order, block);
        for (std::size_t k = 0; k < orders; ++k) total[k].merge(block[k]);
    }
    return detail::finish(total, 1.0);
}

std::vector<Complex> lattice_moments(const PixelLattice& lattice, int max_order) {
    const auto orders = static_cast<std::size_t>(std::max(max_order, 0)) + 1;
    std::vector<ComplexAccumulator> total(orders);
    std::vector<ComplexAccumulator> row(orders);
    for (std::size_t r = 0; r < lattice.height; ++r) {
        std::fill(row.begin(), row.end(), ComplexAccumulator{});
        detail::lattice_row(lattice, r, max_order, row);
        for (std::size_t k = 0; k < orders; ++k) total[k].merge(row[k]);
    }
    return detail::finish(total, lattice.step * lattice.step);
}

}  // namespace serial
}  // namespace pmshape::kernels
