#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "matpi/ring.hpp"

namespace matpi {

/// Dense row-major matrix over a RingSpec.
///
/// Storage is a flat vector of residues or of GMP rationals depending on the
/// ring, so kernels run on contiguous machine words on the GF(p) path. The
/// vectorization of a matrix is its storage order: entry (r, c) sits at
/// index r * cols + c.
class Matrix {
public:
    using ModStorage = std::vector<std::uint64_t>;
    using RatStorage = std::vector<mpq_class>;

    Matrix(RingSpec ring, std::size_t rows, std::size_t cols);

    static Matrix zero(RingSpec ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }
    static Matrix identity(RingSpec ring, std::size_t n);
    /// Builds from row-major integer values, reduced into the ring.
    static Matrix from_ints(RingSpec ring, std::size_t rows, std::size_t cols, std::span<const std::int64_t> values);
    static Matrix from_scalars(RingSpec ring, std::size_t rows, std::size_t cols, std::span<const Scalar> values);

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return rows_ * cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    /// 0-based entry access.
    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);

    bool is_zero() const;

    /// Copies rows [r0, r0 + nr) and columns [c0, c0 + nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// 1 x (rows * cols) row vector with the same entries.
    Matrix vectorized() const;
    /// Inverse of vectorized(): reshapes a vector into rows x cols.
    static Matrix unvectorize(const Matrix& vec, std::size_t rows, std::size_t cols);

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scaled(const Scalar& alpha) const;

    bool operator==(const Matrix& rhs) const;

    /// "[[1, 0], [0, 1]]" with canonical scalar strings.
    std::string to_string() const;
    std::vector<std::vector<std::string>> to_string_rows() const;

    ModStorage& mod_data() { return std::get<ModStorage>(data_); }
    const ModStorage& mod_data() const { return std::get<ModStorage>(data_); }
    RatStorage& rat_data() { return std::get<RatStorage>(data_); }
    const RatStorage& rat_data() const { return std::get<RatStorage>(data_); }

    template <class Ops>
    auto& data() {
        return std::get<std::vector<typename Ops::value_type>>(data_);
    }
    template <class Ops>
    const auto& data() const {
        return std::get<std::vector<typename Ops::value_type>>(data_);
    }

private:
    void check_index(std::size_t r, std::size_t c) const;

    RingSpec ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::variant<ModStorage, RatStorage> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
/// alpha * a + beta * b.
Matrix mat_add_scale(const Matrix& a, const Matrix& b, const Scalar& alpha, const Scalar& beta);
/// The matrix unit e_ij of M_n; i and j are 1-based as in the usual notation.
Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j, RingSpec ring);
Matrix matrix_power(const Matrix& a, std::size_t k);
Scalar trace(const Matrix& a);

struct RrefResult {
    std::size_t rank = 0;
    Matrix echelon;
    std::vector<std::size_t> pivots;  // 0-based pivot columns
};

/// Reduced row echelon form; fields only.
RrefResult rref(const Matrix& a);

/// Basis of the right nullspace as 1 x cols row vectors. Each vector has a 1
/// in one free column and 0 in the others (the standard RREF basis).
std::vector<Matrix> nullspace(const Matrix& a);

void require_field(const RingSpec& ring, std::string_view what);
void require_same_ring(const Matrix& a, const Matrix& b, std::string_view what);

/// Incrementally maintained reduced echelon basis of a subspace of F^width.
/// Rows are kept sorted by pivot column and fully reduced, so the basis is
/// canonical for the subspace it spans.
class Echelon {
public:
    Echelon(RingSpec ring, std::size_t width);

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds a 1 x width row vector (or any matrix of that many entries,
    /// read in row-major order). Returns true if the rank grew.
    bool insert(const Matrix& v);
    /// True if v lies in the span.
    bool contains(const Matrix& v) const;
    /// Remainder of v after reduction against the basis.
    Matrix reduce(const Matrix& v) const;

    const std::vector<Matrix>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

private:
    RingSpec ring_;
    std::size_t width_;
    std::vector<Matrix> rows_;  // each 1 x width
    std::vector<std::size_t> pivots_;
};

}  // namespace matpi
