#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matpi/algebra.hpp"
#include "matpi/block_shape.hpp"

namespace matpi {

/// Throws not_block_triangular if some basis matrix has a nonzero entry below
/// the block diagonal of `shape`.
void require_block_triangular(const SubalgebraBasis& a, const BlockShape& shape);

/// pi_ij: restriction to the square sub-block spanned by parts i..j
/// (1-based, i <= j), re-canonicalized. The image of an algebra
/// homomorphism, so the result is again a subalgebra.
SubalgebraBasis project(const SubalgebraBasis& a, const BlockShape& shape, std::size_t i, std::size_t j);

/// The l x l block in rows 1..l and columns l+m+1..2l+m of a (2l+m)-square matrix.
Matrix ur_corner(const Matrix& x, std::size_t l, std::size_t m);

/// Basis of { T : T pi_i(x) = pi_j(x) T for all x in a }, where pi_i(x) is the
/// i-th diagonal block of x. Blocks i and j must have equal size.
std::vector<Matrix> intertwiner_space(const SubalgebraBasis& a, const BlockShape& shape, std::size_t i,
                                      std::size_t j);

/// True when pi_i(a) is all of M_(l_i) for every block.
bool has_simple_blocks(const SubalgebraBasis& a, const BlockShape& shape);

/// First pair i < j (lexicographic) of equal-size blocks with a nonzero
/// intertwiner. Requires simple blocks, where a nonzero intertwiner is
/// invertible and so realizes an equivalence.
std::optional<std::pair<std::size_t, std::size_t>> detect_repetition(const SubalgebraBasis& a,
                                                                     const BlockShape& shape);

/// True iff every consecutive two-block projection pi_(i,i+1)(a) has a
/// nonzero radical. Returns the first semisimple coupling through
/// `first_split` when not uniserial.
bool is_uniserial(const SubalgebraBasis& a, const BlockShape& shape, std::size_t* first_split = nullptr);

struct StaircaseWitness {
    std::vector<Matrix> tuple;  // arguments of the standard polynomial
    std::size_t degree = 0;
    Matrix value;                // the nonzero evaluation
};

struct ClassificationVerdict {
    enum class Kind { full_block_triangular, satisfies_low_degree, not_canonical };
    enum class Reason { none, repetition, not_uniserial, proper_simple_block };

    Kind kind = Kind::not_canonical;
    Reason reason = Reason::none;
    std::size_t i = 0;  // 1-based block index for the reason
    std::size_t j = 0;  // second index (repetition only)
    BlockShape shape = BlockShape::ones(1);
    std::string detail;
    /// Present for full_block_triangular: s_(2n-1)(staircase) = e_1n and
    /// s_(2n-2)(staircase without e_11) = e_1n.
    std::optional<StaircaseWitness> staircase_witness;
    std::optional<StaircaseWitness> low_degree_witness;

    std::string summary() const;
};

std::string to_string(ClassificationVerdict::Kind kind);
std::string to_string(ClassificationVerdict::Reason reason);

/// Structural classification of a subalgebra given in block coordinates:
///   1. a diagonal block pi_i(a) that is a proper semisimple subalgebra of
///      M_(l_i) gives proper_simple_block(i);
///   2. otherwise a repetition (i, j);
///   3. otherwise the first semisimple coupling i gives not_uniserial(i);
///   4. otherwise a is E_shape, reported with its staircase witness.
/// A diagonal block that is not semisimple means the shape does not refine
/// a composition series; that input is reported as not_canonical, as is a
/// matrix with entries below the block diagonal.
ClassificationVerdict classify(const SubalgebraBasis& a, const BlockShape& shape);

}  // namespace matpi
