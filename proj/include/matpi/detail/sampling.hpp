#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "matpi/algebra.hpp"

namespace matpi::detail {

/// Seeded source of random scalars: uniform residues modulo p, or integers
/// in [-rational_bound, rational_bound] over Q.
class ScalarSampler {
public:
    static constexpr std::int64_t rational_bound = 100;

    ScalarSampler(RingSpec ring, std::uint64_t seed) : ring_(ring), rng_(seed) {}

    Scalar next() {
        if (ring_.is_rational()) {
            std::uniform_int_distribution<std::int64_t> dist(-rational_bound, rational_bound);
            return Scalar(ring_, dist(rng_));
        }
        std::uniform_int_distribution<std::uint64_t> dist(0, ring_.modulus() - 1);
        return Scalar(ring_, static_cast<std::int64_t>(dist(rng_)));
    }

    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(ring_, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, next());
        return m;
    }

    /// Random combination of the basis of `a` (zero for the zero algebra).
    Matrix element(const SubalgebraBasis& a) {
        std::vector<Scalar> coords;
        coords.reserve(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k) coords.push_back(next());
        return a.element(coords);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    RingSpec ring_;
    std::mt19937_64 rng_;
};

}  // namespace matpi::detail
