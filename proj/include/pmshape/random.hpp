/**
 * @file random.hpp
 * @brief Counter-based random streams (Philox4x32-10) for reproducible experiments.
 *
 * Every draw is a pure function of (seed, stream, counter), so trials can run
 * in any order or in parallel and still produce identical numbers. Normal
 * variates use Box-Muller so the values do not depend on the standard
 * library's distribution implementations.
 */
#pragma once

#include <pmshape/types.hpp>

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pmshape {

inline constexpr std::string_view kGeneratorName = "philox4x32-10";

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// One Philox4x32 block with 10 rounds.
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept;

    /// Uniform in the open interval (0, 1), 53-bit resolution.
    double uniform();
    /// Standard normal.
    double normal();
    /// x + jy with x, y independent standard normals.
    Complex complex_normal();
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

    /// Fisher-Yates permutation of 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::uint32_t next_word();
    std::uint64_t next_u64();

    PhiloxKey key_{};
    std::uint64_t stream_ = 0;
    std::uint64_t block_ = 0;
    PhiloxCounter buffer_{};
    int used_ = 4;
};

}  // namespace pmshape
