#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "matpi/matrix.hpp"

namespace matpi::testing {

inline const RingSpec gf5 = RingSpec::prime_field(5);
inline const RingSpec gf7 = RingSpec::prime_field(7);
inline const RingSpec gf101 = RingSpec::prime_field(101);
inline const RingSpec rat = RingSpec::rationals();

inline Matrix mat(RingSpec ring, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> v) {
    std::vector<std::int64_t> values(v);
    return Matrix::from_ints(ring, rows, cols, values);
}

inline Matrix e(std::size_t n, std::size_t i, std::size_t j, RingSpec ring) { return matrix_unit(n, i, j, ring); }

/// Uniform random entries in [-bound, bound], reduced into the ring.
inline Matrix random_matrix(std::mt19937_64& rng, RingSpec ring, std::size_t rows, std::size_t cols,
                            std::int64_t bound = 50) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    std::vector<std::int64_t> values(rows * cols);
    for (auto& x : values) x = dist(rng);
    return Matrix::from_ints(ring, rows, cols, values);
}

inline std::vector<Matrix> random_tuple(std::mt19937_64& rng, RingSpec ring, std::size_t t, std::size_t n) {
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < t; ++k) out.push_back(random_matrix(rng, ring, n, n));
    return out;
}

/// All n^2 matrix units of M_n in row-major order.
inline std::vector<Matrix> all_units(std::size_t n, RingSpec ring) {
    std::vector<Matrix> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) out.push_back(matrix_unit(n, i, j, ring));
    return out;
}

}  // namespace matpi::testing
