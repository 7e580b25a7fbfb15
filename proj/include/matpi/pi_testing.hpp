#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matpi/algebra.hpp"
#include "matpi/constructions.hpp"
#include "matpi/standard_poly.hpp"

namespace matpi {

struct TestMode {
    enum class Kind { exhaustive, randomized };
    Kind kind = Kind::exhaustive;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    /// Worker threads for exhaustive sweeps; results do not depend on it.
    std::size_t threads = 1;

    static TestMode exhaustive(std::size_t threads = 1) { return TestMode{Kind::exhaustive, 0, 0, threads}; }
    static TestMode randomized(std::size_t trials, std::uint64_t seed) {
        return TestMode{Kind::randomized, trials, seed, 1};
    }
};

struct IdentityWitness {
    /// Basis (or spanning set) indices of the arguments; empty for
    /// randomized witnesses, whose arguments are random combinations.
    std::vector<std::size_t> indices;
    std::vector<Matrix> tuple;
    Matrix value;
};

struct IdentityReport {
    std::string algebra;
    std::size_t degree = 0;
    TestMode mode;
    bool identity = false;
    std::optional<IdentityWitness> witness;
    std::uint64_t tuples_checked = 0;
    /// Randomized "identity" verdicts only mean no counterexample was found.
    bool probabilistic = false;
    std::string justification;
    double elapsed_seconds = 0.0;
};

/// Decides whether s_t vanishes on `a`.
///
/// Exhaustive mode evaluates s_t on every strictly increasing t-combination of
/// basis elements and stops at the first nonzero value in combination order.
/// Randomized mode evaluates on `trials` tuples of random elements: uniform
/// residues over GF(p), integers in [-100, 100] over Q.
IdentityReport is_standard_identity(const SubalgebraBasis& a, std::size_t t, const TestMode& mode,
                                    std::string descriptor = {});

/// Z/m path: every t-tuple from the spanning set (no combination pruning
/// over rings with zero divisors).
IdentityReport is_standard_identity(const RemarkAlgebra& b, std::size_t t);

struct MinDegreeResult {
    std::optional<std::size_t> degree;
    std::vector<IdentityReport> reports;
    /// For unital algebras: the minimal degree is even and s_(degree+1) also
    /// vanishes. Unset when there is nothing to cross-check.
    std::optional<bool> parity_cross_check;
};

MinDegreeResult min_standard_degree(const SubalgebraBasis& a, std::size_t t_max, const TestMode& mode,
                                    std::string descriptor = {});

struct IdentitySpace {
    std::size_t degree = 0;
    /// Coefficient vectors (1 x t!), indexed by lexicographic permutation rank,
    /// normalized so the first nonzero entry is 1.
    std::vector<Matrix> basis;
    std::uint64_t tuples_scanned = 0;

    std::size_t dimension() const noexcept { return basis.size(); }
};

inline constexpr std::size_t identity_space_max_degree = 6;

/// All multilinear identities of degree t satisfied by `a`: the nullspace of
/// the evaluation matrix over every t-tuple of basis elements.
IdentitySpace multilinear_identity_space(const SubalgebraBasis& a, std::size_t t);

struct LemmaBlocksReport {
    bool valid_instance = false;
    std::string invalid_reason;
    std::size_t l = 0, m = 0, q = 0, r = 0;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::optional<std::vector<Matrix>> first_violation;
};

/// Random elements [[x, b], [0, y]] with x from a_top, y from a_bot and an
/// arbitrary coupling b; checks that s_(q+r) vanishes on `trials` tuples.
LemmaBlocksReport lemma_blocks_check(const SubalgebraBasis& a_top, const SubalgebraBasis& a_bot, std::size_t q,
                                     std::size_t r, std::size_t trials, std::uint64_t seed);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace matpi
