#include "matpi/block_structure.hpp"

#include "matpi/constructions.hpp"
#include "matpi/standard_poly.hpp"

namespace matpi {

void require_block_triangular(const SubalgebraBasis& a, const BlockShape& shape) {
    if (shape.n() != a.n())
        throw Error(Errc::dimension_mismatch,
                    "shape " + shape.to_string() + " does not sum to n = " + std::to_string(a.n()));
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const auto& x = a.basis()[k];
        for (std::size_t r = 0; r < a.n(); ++r)
            for (std::size_t c = 0; c < a.n(); ++c)
                if (shape.block_of(r) > shape.block_of(c) && !x.at(r, c).is_zero())
                    throw Error(Errc::not_block_triangular,
                                "basis element " + std::to_string(k) + " has a nonzero entry at (" +
                                    std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                    ") below the block diagonal of " + shape.to_string());
    }
}

SubalgebraBasis project(const SubalgebraBasis& a, const BlockShape& shape, std::size_t i, std::size_t j) {
    require_block_triangular(a, shape);
    if (i < 1 || i > j || j > shape.blocks())
        throw Error(Errc::index_out_of_range, "projection (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") invalid for shape " + shape.to_string());
    const auto start = shape.offset(i);
    const auto size = shape.offset(j) + shape.part(j) - start;
    Echelon image(a.ring(), size * size);
    for (const auto& x : a.basis()) image.insert(x.block(start, start, size, size));
    return SubalgebraBasis::from_closed_echelon(image, size);
}

Matrix ur_corner(const Matrix& x, std::size_t l, std::size_t m) {
    if (l == 0 || m == 0) throw Error(Errc::invalid_argument, "ur_corner needs positive l and m");
    const auto n = 2 * l + m;
    if (x.rows() != n || x.cols() != n)
        throw Error(Errc::dimension_mismatch, "ur_corner expects a " + std::to_string(n) + "x" + std::to_string(n) +
                                                  " matrix");
    return x.block(0, l + m, l, l);
}

std::vector<Matrix> intertwiner_space(const SubalgebraBasis& a, const BlockShape& shape, std::size_t i,
                                      std::size_t j) {
    require_field(a.ring(), "intertwiner_space");
    require_block_triangular(a, shape);
    const auto k = shape.part(i);
    if (shape.part(j) != k)
        throw Error(Errc::dimension_mismatch, "blocks " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " of " + shape.to_string() + " differ in size");
    const auto& ring = a.ring();
    const auto oi = shape.offset(i), oj = shape.offset(j);
    const auto unknowns = k * k;  // T(r, s) is unknown r * k + s

    if (a.dim() == 0) {
        std::vector<Matrix> all;
        for (std::size_t u = 0; u < unknowns; ++u) all.push_back(matrix_unit(k, u / k + 1, u % k + 1, ring));
        return all;
    }

    // One equation per basis element and entry (r, c) of T pi_i(x) - pi_j(x) T.
    Matrix system(ring, a.dim() * unknowns, unknowns);
    std::size_t row = 0;
    for (const auto& x : a.basis()) {
        const auto left = x.block(oi, oi, k, k);
        const auto right = x.block(oj, oj, k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c, ++row)
                for (std::size_t s = 0; s < k; ++s) {
                    const auto u1 = r * k + s;  // T(r, s) * left(s, c)
                    system.set(row, u1, system.at(row, u1) + left.at(s, c));
                    const auto u2 = s * k + c;  // right(r, s) * T(s, c)
                    system.set(row, u2, system.at(row, u2) - right.at(r, s));
                }
    }
    std::vector<Matrix> out;
    for (const auto& v : nullspace(system)) out.push_back(Matrix::unvectorize(v, k, k));
    return out;
}

bool has_simple_blocks(const SubalgebraBasis& a, const BlockShape& shape) {
    for (std::size_t i = 1; i <= shape.blocks(); ++i) {
        const auto l = shape.part(i);
        if (project(a, shape, i, i).dim() != l * l) return false;
    }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> detect_repetition(const SubalgebraBasis& a,
                                                                     const BlockShape& shape) {
    if (!has_simple_blocks(a, shape))
        throw Error(Errc::not_simple_blocks, "detect_repetition needs pi_i(A) = M_(l_i) for every block of " +
                                                 shape.to_string());
    for (std::size_t i = 1; i <= shape.blocks(); ++i)
        for (std::size_t j = i + 1; j <= shape.blocks(); ++j)
            if (shape.part(i) == shape.part(j) && !intertwiner_space(a, shape, i, j).empty())
                return std::pair{i, j};
    return std::nullopt;
}

bool is_uniserial(const SubalgebraBasis& a, const BlockShape& shape, std::size_t* first_split) {
    if (shape.blocks() < 2) throw Error(Errc::invalid_argument, "uniseriality needs at least two blocks");
    for (std::size_t i = 1; i < shape.blocks(); ++i) {
        if (is_semisimple(project(a, shape, i, i + 1))) {
            if (first_split) *first_split = i;
            return false;
        }
    }
    return true;
}

std::string to_string(ClassificationVerdict::Kind kind) {
    switch (kind) {
        case ClassificationVerdict::Kind::full_block_triangular: return "FullBlockTriangular";
        case ClassificationVerdict::Kind::satisfies_low_degree: return "SatisfiesLowDegree";
        case ClassificationVerdict::Kind::not_canonical: return "NotCanonical";
    }
    return "?";
}

std::string to_string(ClassificationVerdict::Reason reason) {
    switch (reason) {
        case ClassificationVerdict::Reason::none: return "None";
        case ClassificationVerdict::Reason::repetition: return "Repetition";
        case ClassificationVerdict::Reason::not_uniserial: return "NotUniserial";
        case ClassificationVerdict::Reason::proper_simple_block: return "ProperSimpleBlock";
    }
    return "?";
}

std::string ClassificationVerdict::summary() const {
    using K = ClassificationVerdict::Kind;
    switch (kind) {
        case K::full_block_triangular: return "FullBlockTriangular" + shape.to_string();
        case K::not_canonical: return "NotCanonical: " + detail;
        case K::satisfies_low_degree: {
            std::string args = std::to_string(i);
            if (reason == Reason::repetition) args += "," + std::to_string(j);
            return "SatisfiesLowDegree(" + to_string(reason) + "(" + args + "))";
        }
    }
    return "?";
}

namespace {

StaircaseWitness evaluate_witness(std::vector<Matrix> tuple) {
    auto value = eval_standard_dp(tuple);
    const auto degree = tuple.size();
    return StaircaseWitness{std::move(tuple), degree, std::move(value)};
}

}  // namespace

ClassificationVerdict classify(const SubalgebraBasis& a, const BlockShape& shape) {
    using K = ClassificationVerdict::Kind;
    using R = ClassificationVerdict::Reason;
    const auto& ring = a.ring();
    require_field(ring, "classify");
    if (ring.characteristic() != 0 && ring.characteristic() <= a.n())
        throw Error(Errc::characteristic_too_small, "classification needs Q or GF(p) with p > n");

    ClassificationVerdict v;
    v.shape = shape;
    try {
        require_block_triangular(a, shape);
    } catch (const Error& e) {
        if (e.code() != Errc::not_block_triangular) throw;
        v.kind = K::not_canonical;
        v.detail = e.what();
        return v;
    }

    // Step 1: diagonal blocks. A proper semisimple block already forces the
    // low-degree identity; a non-semisimple block means the coordinates do
    // not refine a composition series, and nothing can be concluded.
    std::optional<std::size_t> non_semisimple;
    for (std::size_t i = 1; i <= shape.blocks(); ++i) {
        const auto l = shape.part(i);
        const auto block = project(a, shape, i, i);
        if (block.dim() == l * l) continue;
        if (is_semisimple(block)) {
            v.kind = K::satisfies_low_degree;
            v.reason = R::proper_simple_block;
            v.i = i;
            v.detail = "pi_" + std::to_string(i) + "(A) has dimension " + std::to_string(block.dim()) + " < " +
                       std::to_string(l * l);
            return v;
        }
        if (!non_semisimple) non_semisimple = i;
    }
    if (non_semisimple) {
        v.kind = K::not_canonical;
        v.i = *non_semisimple;
        v.detail = "diagonal block " + std::to_string(*non_semisimple) + " of " + shape.to_string() +
                   " is not semisimple; refine the shape";
        return v;
    }

    // Step 2: repetitions among equal-size blocks.
    if (auto rep = detect_repetition(a, shape)) {
        v.kind = K::satisfies_low_degree;
        v.reason = R::repetition;
        v.i = rep->first;
        v.j = rep->second;
        v.detail = "pi_" + std::to_string(v.i) + " and pi_" + std::to_string(v.j) + " are equivalent";
        return v;
    }

    // Step 3: uniseriality.
    if (shape.blocks() >= 2) {
        std::size_t split = 0;
        if (!is_uniserial(a, shape, &split)) {
            v.kind = K::satisfies_low_degree;
            v.reason = R::not_uniserial;
            v.i = split;
            v.detail = "Lambda_(" + std::to_string(split) + "," + std::to_string(split + 1) + ") is semisimple";
            return v;
        }
    }

    // Step 4: every coupling must be the full off-diagonal block, and then a
    // must be all of E_shape.
    for (std::size_t i = 1; i < shape.blocks(); ++i) {
        const auto li = shape.part(i), lj = shape.part(i + 1);
        const auto full = li * li + lj * lj + li * lj;
        const auto got = project(a, shape, i, i + 1).dim();
        if (got != full)
            throw Error(Errc::contract_violation, "coupling Lambda_(" + std::to_string(i) + "," + std::to_string(i + 1) +
                                                      ") has dimension " + std::to_string(got) + ", expected " +
                                                      std::to_string(full));
    }
    const auto expected = full_block_algebra(shape, ring);
    if (!(a == expected))
        throw Error(Errc::contract_violation, "couplings are full but dim A = " + std::to_string(a.dim()) +
                                                  " differs from dim E" + shape.to_string() + " = " +
                                                  std::to_string(expected.dim()));

    v.kind = K::full_block_triangular;
    v.detail = "A = E" + shape.to_string();
    auto stairs = staircase(a.n(), ring);
    v.staircase_witness = evaluate_witness(stairs);
    if (a.n() >= 2) v.low_degree_witness = evaluate_witness(std::vector<Matrix>(stairs.begin() + 1, stairs.end()));
    return v;
}

}  // namespace matpi
