#include "matpi/lemma_checks.hpp"

#include "matpi/block_structure.hpp"
#include "matpi/detail/sampling.hpp"

namespace matpi {

SweepResult consecutive_factor_sweep(std::size_t m, std::size_t offset, std::size_t window, std::size_t size,
                                     std::size_t trials, std::uint64_t seed, RingSpec ring) {
    SweepResult res;
    res.name = "consecutive factor sum m=" + std::to_string(m) + " offset=" + std::to_string(offset) +
               " r=" + std::to_string(window);
    res.trials = trials;
    detail::ScalarSampler sampler(ring, seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<Matrix> xs;
        for (std::size_t k = 0; k < m; ++k) xs.push_back(sampler.matrix(size, size));
        if (!(consecutive_factor_sum(xs, offset, window) == contracted_standard(xs, offset, window))) {
            if (!res.first_failure) res.first_failure = xs;
            ++res.failures;
        }
    }
    return res;
}

SweepResult ur_vanishing_sweep(std::size_t l, std::size_t m, std::size_t trials, std::uint64_t seed, RingSpec ring) {
    SweepResult res;
    res.name = "ur corner vanishing l=" + std::to_string(l) + " m=" + std::to_string(m);
    res.trials = trials;
    const std::size_t n = 2 * l + m, t = 2 * (l + m);
    detail::ScalarSampler sampler(ring, seed);
    auto element = [&] {
        Matrix x(ring, n, n);
        auto put = [&](std::size_t r0, std::size_t c0, const Matrix& blk) {
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c) x.set(r0 + r, c0 + c, blk.at(r, c));
        };
        const auto a = sampler.matrix(l, l);
        put(0, 0, a);
        put(0, l, sampler.matrix(l, m));
        put(l, l, sampler.matrix(m, m));
        put(l, l + m, sampler.matrix(m, l));
        put(l + m, l + m, a);
        return x;
    };
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<Matrix> xs;
        for (std::size_t k = 0; k < t; ++k) xs.push_back(element());
        if (!ur_corner(eval_standard_dp(xs), l, m).is_zero()) {
            if (!res.first_failure) res.first_failure = xs;
            ++res.failures;
        }
    }
    return res;
}

IdentityReport repetition_identity_check(std::size_t l, std::size_t m, RingSpec ring, const TestMode& mode) {
    return is_standard_identity(repetition_algebra(l, m, ring), 2 * (l + m), mode,
                                "repetition_algebra(" + std::to_string(l) + "," + std::to_string(m) + ") over " +
                                    ring.to_string());
}

IdentityReport remark_witness_search(std::size_t n, std::uint64_t modulus, std::uint64_t generator) {
    if (n < 2) throw Error(Errc::invalid_argument, "remark witness needs n >= 2");
    return is_standard_identity(remark_algebra(n, modulus, generator), 2 * n - 2);
}

}  // namespace matpi
