#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matpi/pi_testing.hpp"

namespace matpi {

/// Outcome of a seeded property sweep.
struct SweepResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::optional<std::vector<Matrix>> first_failure;

    bool passed() const noexcept { return failures == 0; }
};

/// consecutive_factor_sum(X, offset, window) against the contracted
/// standard polynomial on random `size` x `size` tuples of length m.
SweepResult consecutive_factor_sweep(std::size_t m, std::size_t offset, std::size_t window, std::size_t size,
                                     std::size_t trials, std::uint64_t seed, RingSpec ring);

/// Random elements [[a, b, 0], [0, e, d], [0, 0, a]] (corner cleared) of the
/// repetition algebra; checks ur(s_(2(l+m))(M_1, ...)) = 0.
SweepResult ur_vanishing_sweep(std::size_t l, std::size_t m, std::size_t trials, std::uint64_t seed, RingSpec ring);

/// s_(2(l+m)) on repetition_algebra(l, m), exhaustively.
IdentityReport repetition_identity_check(std::size_t l, std::size_t m, RingSpec ring,
                                         const TestMode& mode = TestMode::exhaustive());

/// Searches B subset of U_n(Z/modulus) for a nonzero value of s_(2n-2).
IdentityReport remark_witness_search(std::size_t n, std::uint64_t modulus, std::uint64_t generator);

}  // namespace matpi
