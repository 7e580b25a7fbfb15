#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "matpi/matrix.hpp"

namespace matpi {

inline constexpr std::size_t naive_max_degree = 8;
inline constexpr std::size_t dp_max_degree = 24;

/// A permutation of 1..t stored as its one-line word (sigma(1), ..., sigma(t)).
class Permutation {
public:
    /// Validates that word is a permutation of 1..t.
    explicit Permutation(std::vector<std::size_t> word);

    static Permutation identity(std::size_t t);
    /// Permutation with the given rank in lexicographic order of words.
    static Permutation from_rank(std::size_t t, std::uint64_t rank);

    const std::vector<std::size_t>& word() const noexcept { return word_; }
    std::size_t degree() const noexcept { return word_.size(); }
    int sign() const noexcept { return sign_; }
    std::uint64_t rank() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> word_;
    int sign_;
};

std::uint64_t factorial(std::size_t t);

/// sum over sigma of coeff(sigma) X_sigma(1) ... X_sigma(t); absent
/// coefficients are zero. Keys are lexicographic permutation ranks.
struct MultilinearPoly {
    std::size_t degree = 0;
    std::map<std::uint64_t, Scalar> coefficients;

    /// The standard polynomial s_t over the given ring.
    static MultilinearPoly standard(std::size_t t, RingSpec ring);
    /// Dense coefficient vector of length t!, indexed by rank.
    static MultilinearPoly from_dense(const Matrix& row);
};

/// Direct sum over all t! permutations, enumerated in lexicographic order.
/// This is the reference oracle; t <= 8.
Matrix eval_standard_naive(std::span<const Matrix> mats);

/// Subset recursion g(S) = sum_{i in S} (-1)^{|S| - rank_S(i)} g(S \ {i}) X_i,
/// g(empty) = I; returns g({1..t}). O(2^t t) matrix products, t <= 24.
Matrix eval_standard_dp(std::span<const Matrix> mats);

Matrix eval_multilinear(const MultilinearPoly& poly, std::span<const Matrix> mats);

/// Sum of the terms of s_m whose word contains i+1, ..., i+r as a consecutive
/// block in that order, each with its s_m sign. `offset` is the number of
/// variables before the block (0-based), m <= 8.
Matrix consecutive_factor_sum(std::span<const Matrix> mats, std::size_t offset, std::size_t window);

/// Contracted form s_{m-r+1}(X_1, ..., X_i, X_{i+1} ... X_{i+r}, X_{i+r+1}, ..., X_m).
Matrix contracted_standard(std::span<const Matrix> mats, std::size_t offset, std::size_t window);

namespace detail {
/// Shared argument validation: nonempty, square, equal size and ring.
void check_tuple(std::span<const Matrix> mats, std::string_view what);
/// True if two arguments are equal matrices (alternation short-circuit).
bool has_repeated_argument(std::span<const Matrix> mats);
}  // namespace detail

}  // namespace matpi
