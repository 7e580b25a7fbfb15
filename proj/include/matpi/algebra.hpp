#pragma once

#include <cstddef>
#include <vector>

#include "matpi/matrix.hpp"

namespace matpi {

struct GeneratorSet {
    RingSpec ring;
    std::size_t n = 0;
    std::vector<Matrix> gens;
    bool include_identity = false;
};

/// A subalgebra of M_n(F) held as the reduced echelon basis of its
/// vectorization. Two bases are equal exactly when they span the same
/// subspace, so equality of algebras is list comparison.
class SubalgebraBasis {
public:
    /// The zero subalgebra of M_n.
    SubalgebraBasis(RingSpec ring, std::size_t n);

    /// Echelonizes the span of `mats` and verifies it is multiplicatively
    /// closed; throws contract_violation otherwise.
    static SubalgebraBasis from_span(RingSpec ring, std::size_t n, const std::vector<Matrix>& mats);
    /// Span without the closure check (used when closure is established by
    /// construction, e.g. inside close_generators).
    static SubalgebraBasis from_closed_echelon(const Echelon& echelon, std::size_t n);

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Matrix>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return echelon_.pivots(); }
    const Echelon& echelon() const noexcept { return echelon_; }

    /// Linear combination sum coords[k] * basis[k].
    Matrix element(const std::vector<Scalar>& coords) const;
    bool is_unital() const;
    bool is_closed() const;

    bool operator==(const SubalgebraBasis& rhs) const {
        return ring_ == rhs.ring_ && n_ == rhs.n_ && basis_ == rhs.basis_;
    }

private:
    RingSpec ring_;
    std::size_t n_;
    Echelon echelon_;
    std::vector<Matrix> basis_;  // echelon rows reshaped to n x n
};

/// Smallest subalgebra containing the generators (and I when flagged).
SubalgebraBasis close_generators(const GeneratorSet& g);

bool contains(const SubalgebraBasis& a, const Matrix& x);

/// rad(A) = { x in A : Tr(xy) = 0 for all y in A }; valid over Q and over
/// GF(p) with p > n, which is enforced.
SubalgebraBasis jacobson_radical(const SubalgebraBasis& a);

bool is_semisimple(const SubalgebraBasis& a);

}  // namespace matpi
