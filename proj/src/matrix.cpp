#include "matpi/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "matpi/detail/field_ops.hpp"
#include "matpi/detail/kernels.hpp"

namespace matpi {

using detail::ModOps;
using detail::RatOps;
using detail::with_ops;

namespace {

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

void require_field(const RingSpec& ring, std::string_view what) {
    if (!ring.is_field())
        throw Error(Errc::unsupported_ring, std::string(what) + " requires a field, got " + ring.to_string());
}

void require_same_ring(const Matrix& a, const Matrix& b, std::string_view what) {
    if (!(a.ring() == b.ring()))
        throw Error(Errc::ring_mismatch,
                    std::string(what) + ": rings " + a.ring().to_string() + " and " + b.ring().to_string());
}

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols) : ring_(ring), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw Error(Errc::invalid_argument, "matrix dimensions must be positive");
    if (ring.is_rational())
        data_ = RatStorage(rows * cols);
    else
        data_ = ModStorage(rows * cols, 0);
}

Matrix Matrix::identity(RingSpec ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ring));
    return m;
}

Matrix Matrix::from_ints(RingSpec ring, std::size_t rows, std::size_t cols, std::span<const std::int64_t> values) {
    if (values.size() != rows * cols)
        throw Error(Errc::dimension_mismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                  std::to_string(values.size()));
    Matrix m(ring, rows, cols);
    with_ops(ring, [&](auto ops) {
        auto& d = m.data<decltype(ops)>();
        for (std::size_t k = 0; k < values.size(); ++k) d[k] = ops.from_int(values[k]);
    });
    return m;
}

Matrix Matrix::from_scalars(RingSpec ring, std::size_t rows, std::size_t cols, std::span<const Scalar> values) {
    if (values.size() != rows * cols)
        throw Error(Errc::dimension_mismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                                  std::to_string(values.size()));
    Matrix m(ring, rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) m.set(k / cols, k % cols, values[k]);
    return m;
}

void Matrix::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw Error(Errc::index_out_of_range,
                    "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside " + dims(*this));
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    if (ring_.is_rational()) return Scalar(ring_, rat_data()[r * cols_ + c]);
    return Scalar(ring_, static_cast<std::int64_t>(mod_data()[r * cols_ + c]));
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    check_index(r, c);
    if (!(v.ring() == ring_))
        throw Error(Errc::ring_mismatch, "scalar over " + v.ring().to_string() + " stored in matrix over " +
                                             ring_.to_string());
    if (ring_.is_rational())
        rat_data()[r * cols_ + c] = v.rational();
    else
        mod_data()[r * cols_ + c] = v.residue();
}

bool Matrix::is_zero() const {
    return with_ops(ring_, [&](auto ops) {
        for (const auto& x : data<decltype(ops)>())
            if (!ops.is_zero(x)) return false;
        return true;
    });
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(Errc::dimension_mismatch, "block exceeds " + dims(*this));
    Matrix out(ring_, nr, nc);
    with_ops(ring_, [&](auto ops) {
        const auto& src = data<decltype(ops)>();
        auto& dst = out.data<decltype(ops)>();
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) dst[r * nc + c] = src[(r0 + r) * cols_ + c0 + c];
    });
    return out;
}

Matrix Matrix::vectorized() const {
    Matrix out = *this;
    out.rows_ = 1;
    out.cols_ = rows_ * cols_;
    return out;
}

Matrix Matrix::unvectorize(const Matrix& vec, std::size_t rows, std::size_t cols) {
    if (vec.size() != rows * cols)
        throw Error(Errc::dimension_mismatch, "cannot reshape " + dims(vec) + " into " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
    Matrix out = vec;
    out.rows_ = rows;
    out.cols_ = cols;
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    return mat_add_scale(*this, rhs, Scalar::one(ring_), Scalar::one(ring_));
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    return mat_add_scale(*this, rhs, Scalar::one(ring_), -Scalar::one(ring_));
}

Matrix Matrix::operator*(const Matrix& rhs) const { return mat_mul(*this, rhs); }

Matrix Matrix::scaled(const Scalar& alpha) const {
    return mat_add_scale(*this, *this, alpha, Scalar::zero(ring_));
}

bool Matrix::operator==(const Matrix& rhs) const {
    return ring_ == rhs.ring_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<std::vector<std::string>> Matrix::to_string_rows() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b, "mat_mul");
    if (a.cols() != b.rows()) throw Error(Errc::dimension_mismatch, "mat_mul: " + dims(a) + " times " + dims(b));
    Matrix out(a.ring(), a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    with_ops(a.ring(), [&](auto ops) {
        const auto& x = a.data<decltype(ops)>();
        const auto& y = b.data<decltype(ops)>();
        auto& z = out.data<decltype(ops)>();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                auto acc = ops.zero();
                for (std::size_t j = 0; j < k; ++j) acc = ops.add(acc, ops.mul(x[r * k + j], y[j * m + c]));
                z[r * m + c] = acc;
            }
    });
    return out;
}

Matrix mat_add_scale(const Matrix& a, const Matrix& b, const Scalar& alpha, const Scalar& beta) {
    require_same_ring(a, b, "mat_add_scale");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(Errc::dimension_mismatch, "mat_add_scale: " + dims(a) + " and " + dims(b));
    if (!(alpha.ring() == a.ring()) || !(beta.ring() == a.ring()))
        throw Error(Errc::ring_mismatch, "mat_add_scale: scalar ring differs from matrix ring");
    Matrix out(a.ring(), a.rows(), a.cols());
    if (a.ring().is_rational()) {
        const auto &x = a.rat_data(), &y = b.rat_data();
        auto& z = out.rat_data();
        for (std::size_t k = 0; k < z.size(); ++k) z[k] = alpha.rational() * x[k] + beta.rational() * y[k];
    } else {
        ModOps ops{a.ring().modulus()};
        const auto &x = a.mod_data(), &y = b.mod_data();
        auto& z = out.mod_data();
        for (std::size_t k = 0; k < z.size(); ++k)
            z[k] = ops.add(ops.mul(alpha.residue(), x[k]), ops.mul(beta.residue(), y[k]));
    }
    return out;
}

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j, RingSpec ring) {
    if (i < 1 || j < 1 || i > n || j > n)
        throw Error(Errc::index_out_of_range,
                    "matrix unit e_(" + std::to_string(i) + "," + std::to_string(j) + ") outside M_" + std::to_string(n));
    Matrix m(ring, n, n);
    m.set(i - 1, j - 1, Scalar::one(ring));
    return m;
}

Matrix matrix_power(const Matrix& a, std::size_t k) {
    if (!a.is_square()) throw Error(Errc::dimension_mismatch, "matrix_power of non-square " + dims(a));
    Matrix out = Matrix::identity(a.ring(), a.rows());
    for (std::size_t i = 0; i < k; ++i) out = out * a;
    return out;
}

Scalar trace(const Matrix& a) {
    if (!a.is_square()) throw Error(Errc::dimension_mismatch, "trace of non-square " + dims(a));
    Scalar s = Scalar::zero(a.ring());
    for (std::size_t i = 0; i < a.rows(); ++i) s = s + a.at(i, i);
    return s;
}

namespace {

// In-place reduction of a rows x cols buffer to reduced row echelon form.
template <class Ops>
std::vector<std::size_t> rref_in_place(const Ops& ops, std::vector<typename Ops::value_type>& d, std::size_t rows,
                                       std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && ops.is_zero(d[p * cols + c])) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(d[p * cols + k], d[r * cols + k]);
        const auto inv = ops.inv(d[r * cols + c]);
        for (std::size_t k = c; k < cols; ++k) d[r * cols + k] = ops.mul(d[r * cols + k], inv);
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || ops.is_zero(d[q * cols + c])) continue;
            const auto f = d[q * cols + c];
            for (std::size_t k = c; k < cols; ++k)
                d[q * cols + k] = ops.sub(d[q * cols + k], ops.mul(f, d[r * cols + k]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Matrix& a) {
    require_field(a.ring(), "rref");
    Matrix e = a;
    auto pivots = with_ops(a.ring(), [&](auto ops) { return rref_in_place(ops, e.data<decltype(ops)>(), a.rows(), a.cols()); });
    return RrefResult{pivots.size(), std::move(e), std::move(pivots)};
}

std::vector<Matrix> nullspace(const Matrix& a) {
    const auto red = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;

    std::vector<Matrix> basis;
    const auto& ring = a.ring();
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Matrix v(ring, 1, a.cols());
        v.set(0, f, Scalar::one(ring));
        for (std::size_t r = 0; r < red.rank; ++r) v.set(0, red.pivots[r], -red.echelon.at(r, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

Echelon::Echelon(RingSpec ring, std::size_t width) : ring_(ring), width_(width) {
    require_field(ring, "echelon basis");
    if (width == 0) throw Error(Errc::invalid_argument, "echelon width must be positive");
}

Matrix Echelon::reduce(const Matrix& v) const {
    if (v.size() != width_)
        throw Error(Errc::dimension_mismatch,
                    "vector of length " + std::to_string(v.size()) + " against width " + std::to_string(width_));
    if (!(v.ring() == ring_)) throw Error(Errc::ring_mismatch, "vector ring differs from echelon ring");
    Matrix out = Matrix::unvectorize(v, 1, width_);
    with_ops(ring_, [&](auto ops) {
        auto& x = out.data<decltype(ops)>();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto f = x[pivots_[r]];
            if (ops.is_zero(f)) continue;
            const auto& row = rows_[r].data<decltype(ops)>();
            for (std::size_t k = pivots_[r]; k < width_; ++k) x[k] = ops.sub(x[k], ops.mul(f, row[k]));
        }
    });
    return out;
}

bool Echelon::contains(const Matrix& v) const { return reduce(v).is_zero(); }

bool Echelon::insert(const Matrix& v) {
    Matrix rem = reduce(v);
    return with_ops(ring_, [&](auto ops) {
        auto& x = rem.data<decltype(ops)>();
        std::size_t p = 0;
        while (p < width_ && ops.is_zero(x[p])) ++p;
        if (p == width_) return false;
        const auto inv = ops.inv(x[p]);
        for (std::size_t k = p; k < width_; ++k) x[k] = ops.mul(x[k], inv);
        // clear the new pivot column from the existing rows
        for (auto& row : rows_) {
            auto& y = row.template data<decltype(ops)>();
            const auto f = y[p];
            if (ops.is_zero(f)) continue;
            for (std::size_t k = p; k < width_; ++k) y[k] = ops.sub(y[k], ops.mul(f, x[k]));
        }
        const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(rem));
        return true;
    });
}

}  // namespace matpi
