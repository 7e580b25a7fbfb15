#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "matpi/algebra.hpp"
#include "matpi/block_shape.hpp"

namespace matpi {

/// E_shape: every matrix unit e_pq with block(p) <= block(q).
SubalgebraBasis full_block_algebra(const BlockShape& shape, RingSpec ring);

/// e_11, e_12, e_22, ..., e_(n-1)n, e_nn (2n - 1 matrices).
std::vector<Matrix> staircase(std::size_t n, RingSpec ring);

/// Matrices [[a, b, c], [0, e, d], [0, 0, a]] with a, c in M_l, e in M_m;
/// lives in M_(2l+m), dimension 2l^2 + m^2 + 2lm.
SubalgebraBasis repetition_algebra(std::size_t l, std::size_t m, RingSpec ring);

/// The strip of e_pq with p <= l < q inside M_(l+m); squares to zero.
SubalgebraBasis radical_T(std::size_t l, std::size_t m, RingSpec ring);

SubalgebraBasis upper_triangular(std::size_t n, RingSpec ring);

/// { diag(x, ..., x) : x in M_k } inside M_(k * copies).
SubalgebraBasis diagonal_embedding(std::size_t k, std::size_t copies, RingSpec ring);

/// Block-diagonal algebra M_l1 x ... x M_lt (no coupling between blocks).
SubalgebraBasis block_diagonal_algebra(const BlockShape& shape, RingSpec ring);

/// The subalgebra B of U_n(Z/m) whose (1,2) entry lies in the ideal (g).
/// Z/m is not a field, so B is held as a spanning set and a membership
/// predicate instead of an echelon basis.
class RemarkAlgebra {
public:
    RemarkAlgebra(std::size_t n, std::uint64_t modulus, std::uint64_t generator);

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t n() const noexcept { return n_; }
    std::uint64_t generator() const noexcept { return generator_; }
    /// Upper matrix units other than e_12, followed by g * e_12.
    const std::vector<Matrix>& spanning_set() const noexcept { return spanning_; }
    bool contains(const Matrix& x) const;

private:
    RingSpec ring_;
    std::size_t n_;
    std::uint64_t generator_;
    std::vector<Matrix> spanning_;
};

RemarkAlgebra remark_algebra(std::size_t n, std::uint64_t modulus, std::uint64_t generator);

/// Tagged description of a named construction, as read from spec files.
struct NamedConstruction {
    struct FullBlock { BlockShape shape; };
    struct Staircase { std::size_t n; };
    struct Repetition { std::size_t l, m; };
    struct RadicalT { std::size_t l, m; };
    struct UpperTriangular { std::size_t n; };
    struct Remark { std::size_t n; std::uint64_t modulus, generator; };
    struct DiagonalEmbedding { std::size_t k, copies; };
    struct BlockDiagonal { BlockShape shape; };

    std::variant<FullBlock, Staircase, Repetition, RadicalT, UpperTriangular, Remark, DiagonalEmbedding, BlockDiagonal>
        kind;

    std::string name() const;
    /// Ambient matrix size of the construction.
    std::size_t ambient_size() const;
    /// Builds the subalgebra; Staircase closes its sequence, Remark is
    /// rejected (use remark_algebra directly).
    SubalgebraBasis build(RingSpec ring) const;
};

}  // namespace matpi
