#include "matpi/constructions.hpp"

#include <numeric>
#include <sstream>

namespace matpi {

BlockShape::BlockShape(std::vector<std::size_t> parts) : parts_(std::move(parts)), n_(0) {
    if (parts_.empty()) throw Error(Errc::invalid_argument, "block shape needs at least one part");
    for (auto p : parts_) {
        if (p == 0) throw Error(Errc::invalid_argument, "block sizes must be positive");
        n_ += p;
    }
}

BlockShape BlockShape::ones(std::size_t n) { return BlockShape(std::vector<std::size_t>(n, 1)); }

std::size_t BlockShape::part(std::size_t i) const {
    if (i < 1 || i > parts_.size())
        throw Error(Errc::index_out_of_range, "block " + std::to_string(i) + " outside shape " + to_string());
    return parts_[i - 1];
}

std::size_t BlockShape::offset(std::size_t i) const {
    part(i);
    return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i - 1), std::size_t{0});
}

std::size_t BlockShape::block_of(std::size_t r) const {
    std::size_t end = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        end += parts_[i];
        if (r < end) return i + 1;
    }
    throw Error(Errc::index_out_of_range, "row " + std::to_string(r) + " outside shape " + to_string());
}

std::string BlockShape::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::vector<BlockShape> compositions(std::size_t n) {
    std::vector<BlockShape> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    if (n > 0) rec(rec, n);
    return out;
}

namespace {

void require_positive(std::size_t v, const char* what) {
    if (v == 0) throw Error(Errc::invalid_argument, std::string(what) + " must be positive");
}

SubalgebraBasis units_algebra(std::size_t n, RingSpec ring, auto&& keep) {
    std::vector<Matrix> units;
    for (std::size_t p = 1; p <= n; ++p)
        for (std::size_t q = 1; q <= n; ++q)
            if (keep(p, q)) units.push_back(matrix_unit(n, p, q, ring));
    return SubalgebraBasis::from_span(ring, n, units);
}

}  // namespace

SubalgebraBasis full_block_algebra(const BlockShape& shape, RingSpec ring) {
    require_field(ring, "full_block_algebra");
    return units_algebra(shape.n(), ring,
                         [&](std::size_t p, std::size_t q) { return shape.block_of(p - 1) <= shape.block_of(q - 1); });
}

SubalgebraBasis block_diagonal_algebra(const BlockShape& shape, RingSpec ring) {
    require_field(ring, "block_diagonal_algebra");
    return units_algebra(shape.n(), ring,
                         [&](std::size_t p, std::size_t q) { return shape.block_of(p - 1) == shape.block_of(q - 1); });
}

std::vector<Matrix> staircase(std::size_t n, RingSpec ring) {
    require_positive(n, "staircase size");
    std::vector<Matrix> seq;
    for (std::size_t k = 1; k <= n; ++k) {
        seq.push_back(matrix_unit(n, k, k, ring));
        if (k < n) seq.push_back(matrix_unit(n, k, k + 1, ring));
    }
    return seq;
}

SubalgebraBasis repetition_algebra(std::size_t l, std::size_t m, RingSpec ring) {
    require_positive(l, "l");
    require_positive(m, "m");
    require_field(ring, "repetition_algebra");
    const std::size_t n = 2 * l + m;
    const std::size_t last = l + m;  // 0-based offset of the repeated corner
    std::vector<Matrix> span;
    for (std::size_t p = 1; p <= l; ++p)
        for (std::size_t q = 1; q <= l; ++q)
            span.push_back(matrix_unit(n, p, q, ring) + matrix_unit(n, last + p, last + q, ring));
    for (std::size_t p = 1; p <= n; ++p)
        for (std::size_t q = 1; q <= n; ++q) {
            const bool b = p <= l && q > l && q <= last;
            const bool c = p <= l && q > last;
            const bool e = p > l && p <= last && q > l && q <= last;
            const bool d = p > l && p <= last && q > last;
            if (b || c || e || d) span.push_back(matrix_unit(n, p, q, ring));
        }
    return SubalgebraBasis::from_span(ring, n, span);
}

SubalgebraBasis radical_T(std::size_t l, std::size_t m, RingSpec ring) {
    require_positive(l, "l");
    require_positive(m, "m");
    require_field(ring, "radical_T");
    return units_algebra(l + m, ring, [&](std::size_t p, std::size_t q) { return p <= l && q > l; });
}

SubalgebraBasis upper_triangular(std::size_t n, RingSpec ring) {
    require_positive(n, "n");
    return full_block_algebra(BlockShape::ones(n), ring);
}

SubalgebraBasis diagonal_embedding(std::size_t k, std::size_t copies, RingSpec ring) {
    require_positive(k, "k");
    require_positive(copies, "copies");
    require_field(ring, "diagonal_embedding");
    const std::size_t n = k * copies;
    std::vector<Matrix> span;
    for (std::size_t p = 1; p <= k; ++p)
        for (std::size_t q = 1; q <= k; ++q) {
            Matrix x = Matrix::zero(ring, n, n);
            for (std::size_t c = 0; c < copies; ++c) x = x + matrix_unit(n, c * k + p, c * k + q, ring);
            span.push_back(std::move(x));
        }
    return SubalgebraBasis::from_span(ring, n, span);
}

RemarkAlgebra::RemarkAlgebra(std::size_t n, std::uint64_t modulus, std::uint64_t generator)
    : ring_(RingSpec::integers_mod(modulus)), n_(n), generator_(generator % modulus) {
    if (n < 2) throw Error(Errc::invalid_argument, "remark algebra needs n >= 2 (it constrains the (1,2) entry)");
    if (generator_ == 0) throw Error(Errc::invalid_argument, "ideal generator must be nonzero modulo " + std::to_string(modulus));
    if (std::gcd(generator_, modulus) == 1)
        throw Error(Errc::invalid_argument, "ideal generator " + std::to_string(generator) + " is a unit modulo " +
                                                std::to_string(modulus) + "; the ideal must be proper");
    for (std::size_t p = 1; p <= n; ++p)
        for (std::size_t q = p; q <= n; ++q)
            if (!(p == 1 && q == 2)) spanning_.push_back(matrix_unit(n, p, q, ring_));
    spanning_.push_back(matrix_unit(n, 1, 2, ring_).scaled(Scalar(ring_, static_cast<std::int64_t>(generator_))));
}

bool RemarkAlgebra::contains(const Matrix& x) const {
    if (!(x.ring() == ring_) || x.rows() != n_ || x.cols() != n_) return false;
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (!x.at(r, c).is_zero()) return false;
    const auto ideal = std::gcd(generator_, ring_.modulus());
    return x.at(0, 1).residue() % ideal == 0;
}

RemarkAlgebra remark_algebra(std::size_t n, std::uint64_t modulus, std::uint64_t generator) {
    return RemarkAlgebra(n, modulus, generator);
}

std::string NamedConstruction::name() const {
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, FullBlock>) return "full_block" + k.shape.to_string();
            else if constexpr (std::is_same_v<K, Staircase>) return "staircase(" + std::to_string(k.n) + ")";
            else if constexpr (std::is_same_v<K, Repetition>)
                return "repetition_algebra(" + std::to_string(k.l) + "," + std::to_string(k.m) + ")";
            else if constexpr (std::is_same_v<K, RadicalT>)
                return "radical_T(" + std::to_string(k.l) + "," + std::to_string(k.m) + ")";
            else if constexpr (std::is_same_v<K, UpperTriangular>) return "upper_triangular(" + std::to_string(k.n) + ")";
            else if constexpr (std::is_same_v<K, Remark>)
                return "remark_algebra(" + std::to_string(k.n) + "," + std::to_string(k.modulus) + "," +
                       std::to_string(k.generator) + ")";
            else if constexpr (std::is_same_v<K, DiagonalEmbedding>)
                return "diagonal_embedding(" + std::to_string(k.k) + "," + std::to_string(k.copies) + ")";
            else return "block_diagonal" + k.shape.to_string();
        },
        kind);
}

std::size_t NamedConstruction::ambient_size() const {
    return std::visit(
        [](const auto& k) -> std::size_t {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, FullBlock> || std::is_same_v<K, BlockDiagonal>) return k.shape.n();
            else if constexpr (std::is_same_v<K, Repetition>) return 2 * k.l + k.m;
            else if constexpr (std::is_same_v<K, RadicalT>) return k.l + k.m;
            else if constexpr (std::is_same_v<K, DiagonalEmbedding>) return k.k * k.copies;
            else return k.n;
        },
        kind);
}

SubalgebraBasis NamedConstruction::build(RingSpec ring) const {
    return std::visit(
        [&](const auto& k) -> SubalgebraBasis {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, FullBlock>) return full_block_algebra(k.shape, ring);
            else if constexpr (std::is_same_v<K, Staircase>)
                return close_generators(GeneratorSet{ring, k.n, staircase(k.n, ring), false});
            else if constexpr (std::is_same_v<K, Repetition>) return repetition_algebra(k.l, k.m, ring);
            else if constexpr (std::is_same_v<K, RadicalT>) return radical_T(k.l, k.m, ring);
            else if constexpr (std::is_same_v<K, UpperTriangular>) return upper_triangular(k.n, ring);
            else if constexpr (std::is_same_v<K, Remark>)
                throw Error(Errc::unsupported_ring, "remark_algebra lives over Z/m and has no echelon basis");
            else if constexpr (std::is_same_v<K, DiagonalEmbedding>) return diagonal_embedding(k.k, k.copies, ring);
            else return block_diagonal_algebra(k.shape, ring);
        },
        kind);
}

}  // namespace matpi
