#include <pmshape/kernels.hpp>

#include "kernels_detail.hpp"

#include <cstdint>

namespace pmshape::kernels::parallel {

// Each block's partial result lands in its own slot; slots are merged in index
// order afterwards, so the reduction tree matches the serial kernels exactly.

Complex sum(std::span<const Complex> terms) {
    const auto blocks = static_cast<std::int64_t>(detail::block_count(terms.size()));
    std::vector<ComplexAccumulator> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b)
        partial[static_cast<std::size_t>(b)] = detail::sum_block(terms, static_cast<std::size_t>(b));
    ComplexAccumulator total;
    for (const auto& p : partial) total.merge(p);
    return total.value();
}

std::vector<Complex> power_sums(std::span<const Complex> z, int max_order) {
    const auto orders = static_cast<std::size_t>(std::max(max_order, 0));
    const auto blocks = static_cast<std::int64_t>(detail::block_count(z.size()));
    std::vector<ComplexAccumulator> partial(static_cast<std::size_t>(blocks) * orders);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const auto slot = static_cast<std::size_t>(b);
        detail::power_sum_block(z, slot, max_order,
                                std::span(partial).subspan(slot * orders, orders));
    }
    std::vector<ComplexAccumulator> total(orders);
    for (std::size_t b = 0; b < static_cast<std::size_t>(blocks); ++b)
        for (std::size_t k = 0; k < orders; ++k) total[k].merge(partial[b * orders + k]);
    return detail::finish(total, 1.0);
}

std::vector<Complex> lattice_moments(const PixelLattice& lattice, int max_order) {
    const auto orders = static_cast<std::size_t>(std::max(max_order, 0)) + 1;
    const auto rows = static_cast<std::int64_t>(lattice.height);
    std::vector<ComplexAccumulator> partial(lattice.height * orders);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) {
        const auto slot = static_cast<std::size_t>(r);
        detail::lattice_row(lattice, slot, max_order,
                            std::span(partial).subspan(slot * orders, orders));
    }
    std::vector<ComplexAccumulator> total(orders);
    for (std::size_t r = 0; r < lattice.height; ++r)
        for (std::size_t k = 0; k < orders; ++k) total[k].merge(partial[r * orders + k]);
    return detail::finish(total, lattice.step * lattice.step);
}

}  // namespace pmshape::kernels::parallel
