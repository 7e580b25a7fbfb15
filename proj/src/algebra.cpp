#include "matpi/algebra.hpp"

namespace matpi {

SubalgebraBasis::SubalgebraBasis(RingSpec ring, std::size_t n) : ring_(ring), n_(n), echelon_(ring, n * n) {
    if (n == 0) throw Error(Errc::invalid_argument, "ambient size must be positive");
}

SubalgebraBasis SubalgebraBasis::from_closed_echelon(const Echelon& echelon, std::size_t n) {
    if (echelon.width() != n * n) throw Error(Errc::dimension_mismatch, "echelon width does not match n^2");
    SubalgebraBasis a(echelon.ring(), n);
    a.echelon_ = echelon;
    for (const auto& row : echelon.rows()) a.basis_.push_back(Matrix::unvectorize(row, n, n));
    return a;
}

SubalgebraBasis SubalgebraBasis::from_span(RingSpec ring, std::size_t n, const std::vector<Matrix>& mats) {
    Echelon e(ring, n * n);
    for (const auto& m : mats) {
        if (m.rows() != n || m.cols() != n)
            throw Error(Errc::dimension_mismatch, "spanning matrix is not " + std::to_string(n) + "x" + std::to_string(n));
        e.insert(m);
    }
    auto a = from_closed_echelon(e, n);
    if (!a.is_closed()) throw Error(Errc::contract_violation, "span is not closed under multiplication");
    return a;
}

Matrix SubalgebraBasis::element(const std::vector<Scalar>& coords) const {
    if (coords.size() != basis_.size())
        throw Error(Errc::dimension_mismatch, "expected " + std::to_string(basis_.size()) + " coordinates");
    Matrix out = Matrix::zero(ring_, n_, n_);
    for (std::size_t k = 0; k < coords.size(); ++k)
        out = mat_add_scale(out, basis_[k], Scalar::one(ring_), coords[k]);
    return out;
}

bool SubalgebraBasis::is_unital() const { return echelon_.contains(Matrix::identity(ring_, n_)); }

bool SubalgebraBasis::is_closed() const {
    for (const auto& u : basis_)
        for (const auto& v : basis_)
            if (!echelon_.contains(u * v)) return false;
    return true;
}

SubalgebraBasis close_generators(const GeneratorSet& g) {
    require_field(g.ring, "close_generators");
    if (g.n == 0) throw Error(Errc::invalid_argument, "ambient size must be positive");
    if (g.gens.empty() && !g.include_identity)
        throw Error(Errc::invalid_argument, "close_generators needs a generator or the identity");

    Echelon span(g.ring, g.n * g.n);
    for (const auto& m : g.gens) {
        if (m.rows() != g.n || m.cols() != g.n)
            throw Error(Errc::dimension_mismatch, "generator is not " + std::to_string(g.n) + "x" + std::to_string(g.n));
        if (!(m.ring() == g.ring)) throw Error(Errc::ring_mismatch, "generator ring differs from " + g.ring.to_string());
        span.insert(m);
    }
    if (g.include_identity) span.insert(Matrix::identity(g.ring, g.n));

    // Each round multiplies the whole current basis against itself.
    for (;;) {
        const auto before = span.rank();
        std::vector<Matrix> basis;
        for (const auto& row : span.rows()) basis.push_back(Matrix::unvectorize(row, g.n, g.n));
        for (const auto& u : basis)
            for (const auto& v : basis) span.insert(u * v);
        if (span.rank() == before) break;
    }
    return SubalgebraBasis::from_closed_echelon(span, g.n);
}

bool contains(const SubalgebraBasis& a, const Matrix& x) {
    if (x.rows() != a.n() || x.cols() != a.n())
        throw Error(Errc::dimension_mismatch, "matrix size does not match the algebra");
    if (!(x.ring() == a.ring())) throw Error(Errc::ring_mismatch, "matrix ring differs from the algebra");
    return a.echelon().contains(x);
}

SubalgebraBasis jacobson_radical(const SubalgebraBasis& a) {
    const auto& ring = a.ring();
    require_field(ring, "jacobson_radical");
    if (ring.characteristic() != 0 && ring.characteristic() <= a.n())
        throw Error(Errc::characteristic_too_small,
                    "trace-form radical needs p > n; got p = " + std::to_string(ring.characteristic()) +
                        ", n = " + std::to_string(a.n()));
    const auto d = a.dim();
    if (d == 0) return a;

    Matrix gram(ring, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const auto v = trace(a.basis()[i] * a.basis()[j]);
            gram.set(i, j, v);
            gram.set(j, i, v);
        }

    Echelon rad(ring, a.n() * a.n());
    for (const auto& coeffs : nullspace(gram)) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < d; ++k) c.push_back(coeffs.at(0, k));
        rad.insert(a.element(c));
    }
    return SubalgebraBasis::from_closed_echelon(rad, a.n());
}

bool is_semisimple(const SubalgebraBasis& a) { return jacobson_radical(a).dim() == 0; }

}  // namespace matpi
