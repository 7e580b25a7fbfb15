#include "matpi/standard_poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "matpi/detail/field_ops.hpp"
#include "matpi/detail/kernels.hpp"

namespace matpi {

using detail::with_ops;

std::uint64_t factorial(std::size_t t) {
    if (t > 20) throw Error(Errc::degree_too_large, "factorial overflows 64 bits for t = " + std::to_string(t));
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= t; ++k) f *= k;
    return f;
}

namespace {

int parity_sign(const std::vector<std::size_t>& word) {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < word.size(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b)
            if (word[a] > word[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Advances to the next word in lexicographic order and updates the sign in
// place; returns false after the last permutation.
bool next_signed_permutation(std::vector<std::size_t>& w, int& sign) {
    const std::size_t t = w.size();
    if (t < 2) return false;
    std::size_t i = t - 1;
    while (i > 0 && w[i - 1] >= w[i]) --i;
    if (i == 0) return false;
    std::size_t j = t - 1;
    while (w[j] <= w[i - 1]) --j;
    std::swap(w[i - 1], w[j]);
    std::reverse(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    const std::size_t transpositions = 1 + (t - i) / 2;
    if (transpositions % 2 == 1) sign = -sign;
    return true;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (auto v : word_) {
        if (v < 1 || v > word_.size() || seen[v])
            throw Error(Errc::invalid_argument, "word is not a permutation of 1.." + std::to_string(word_.size()));
        seen[v] = true;
    }
    sign_ = parity_sign(word_);
}

Permutation Permutation::identity(std::size_t t) {
    std::vector<std::size_t> w(t);
    std::iota(w.begin(), w.end(), std::size_t{1});
    return Permutation(std::move(w));
}

Permutation Permutation::from_rank(std::size_t t, std::uint64_t rank) {
    if (rank >= factorial(t)) throw Error(Errc::index_out_of_range, "permutation rank out of range");
    std::vector<std::size_t> pool(t);
    std::iota(pool.begin(), pool.end(), std::size_t{1});
    std::vector<std::size_t> word;
    for (std::size_t k = t; k >= 1; --k) {
        const auto f = factorial(k - 1);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        word.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(word));
}

std::uint64_t Permutation::rank() const {
    const std::size_t t = word_.size();
    std::uint64_t r = 0;
    for (std::size_t a = 0; a < t; ++a) {
        std::size_t smaller_after = 0;
        for (std::size_t b = a + 1; b < t; ++b)
            if (word_[b] < word_[a]) ++smaller_after;
        r += smaller_after * factorial(t - 1 - a);
    }
    return r;
}

MultilinearPoly MultilinearPoly::standard(std::size_t t, RingSpec ring) {
    MultilinearPoly p;
    p.degree = t;
    const auto count = factorial(t);
    for (std::uint64_t r = 0; r < count; ++r) {
        const auto sigma = Permutation::from_rank(t, r);
        p.coefficients.emplace(r, Scalar(ring, std::int64_t{sigma.sign()}));
    }
    return p;
}

MultilinearPoly MultilinearPoly::from_dense(const Matrix& row) {
    MultilinearPoly p;
    std::size_t t = 0;
    while (factorial(t) < row.size()) ++t;
    if (factorial(t) != row.size())
        throw Error(Errc::dimension_mismatch, "coefficient vector length " + std::to_string(row.size()) + " is not a factorial");
    p.degree = t;
    for (std::size_t k = 0; k < row.size(); ++k) {
        auto c = row.at(k / row.cols(), k % row.cols());
        if (!c.is_zero()) p.coefficients.emplace(k, c);
    }
    return p;
}

namespace detail {

void check_tuple(std::span<const Matrix> mats, std::string_view what) {
    if (mats.empty()) throw Error(Errc::invalid_argument, std::string(what) + ": empty argument list");
    const auto& first = mats.front();
    if (!first.is_square()) throw Error(Errc::dimension_mismatch, std::string(what) + ": arguments must be square");
    for (const auto& m : mats) {
        if (!(m.ring() == first.ring())) throw Error(Errc::ring_mismatch, std::string(what) + ": mixed rings");
        if (m.rows() != first.rows() || m.cols() != first.cols())
            throw Error(Errc::dimension_mismatch, std::string(what) + ": arguments differ in size");
    }
}

bool has_repeated_argument(std::span<const Matrix> mats) {
    for (std::size_t a = 0; a < mats.size(); ++a)
        for (std::size_t b = a + 1; b < mats.size(); ++b)
            if (mats[a] == mats[b]) return true;
    return false;
}

}  // namespace detail

namespace {

template <class Ops>
using Buf = std::vector<typename Ops::value_type>;

// acc += sign * X_w(1) ... X_w(t), using two scratch buffers.
template <class Ops>
void add_word_product(const Ops& ops, std::span<const Matrix> mats, const std::vector<std::size_t>& word, int sign,
                      Buf<Ops>& acc, Buf<Ops>& cur, Buf<Ops>& tmp) {
    const std::size_t n = mats.front().rows();
    const auto& first = mats[word[0] - 1].template data<Ops>();
    std::copy(first.begin(), first.end(), cur.begin());
    for (std::size_t k = 1; k < word.size(); ++k) {
        detail::mul_square(ops, cur.data(), mats[word[k] - 1].template data<Ops>().data(), tmp.data(), n);
        std::swap(cur, tmp);
    }
    for (std::size_t e = 0; e < acc.size(); ++e) acc[e] = sign > 0 ? ops.add(acc[e], cur[e]) : ops.sub(acc[e], cur[e]);
}

template <class Ops>
Matrix naive_sum(const Ops& ops, std::span<const Matrix> mats, auto&& keep) {
    const std::size_t n = mats.front().rows();
    Matrix out(mats.front().ring(), n, n);
    auto& acc = out.data<Ops>();
    Buf<Ops> cur(n * n), tmp(n * n);
    std::vector<std::size_t> word(mats.size());
    std::iota(word.begin(), word.end(), std::size_t{1});
    int sign = 1;
    do {
        if (keep(word)) add_word_product(ops, mats, word, sign, acc, cur, tmp);
    } while (next_signed_permutation(word, sign));
    return out;
}

template <class Ops>
Matrix dp_eval(const Ops& ops, std::span<const Matrix> mats) {
    const std::size_t t = mats.size();
    const std::size_t n = mats.front().rows();
    const std::size_t nn = n * n;
    const std::size_t subsets = std::size_t{1} << t;

    Buf<Ops> table(subsets * nn, ops.zero());
    for (std::size_t d = 0; d < n; ++d) table[d * n + d] = ops.one();

    for (std::size_t set = 1; set < subsets; ++set) {
        auto* dst = table.data() + set * nn;
        const auto size = static_cast<std::size_t>(std::popcount(set));
        std::size_t rank = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if (!(set >> i & 1U)) continue;
            ++rank;
            const int sign = (size - rank) % 2 == 0 ? 1 : -1;
            const auto* prev = table.data() + (set ^ (std::size_t{1} << i)) * nn;
            detail::mul_accumulate(ops, prev, mats[i].template data<Ops>().data(), dst, n, sign);
        }
    }
    Matrix out(mats.front().ring(), n, n);
    auto& res = out.data<Ops>();
    std::copy_n(table.begin() + static_cast<std::ptrdiff_t>((subsets - 1) * nn), nn, res.begin());
    return out;
}

}  // namespace

Matrix eval_standard_naive(std::span<const Matrix> mats) {
    detail::check_tuple(mats, "eval_standard_naive");
    if (mats.size() > naive_max_degree)
        throw Error(Errc::degree_too_large, "naive evaluation is capped at t = " + std::to_string(naive_max_degree));
    const auto n = mats.front().rows();
    if (detail::has_repeated_argument(mats)) return Matrix::zero(mats.front().ring(), n, n);
    return with_ops(mats.front().ring(),
                    [&](auto ops) { return naive_sum(ops, mats, [](const auto&) { return true; }); });
}

Matrix eval_standard_dp(std::span<const Matrix> mats) {
    detail::check_tuple(mats, "eval_standard_dp");
    if (mats.size() > dp_max_degree)
        throw Error(Errc::degree_too_large, "subset evaluation is capped at t = " + std::to_string(dp_max_degree));
    const auto n = mats.front().rows();
    if (detail::has_repeated_argument(mats)) return Matrix::zero(mats.front().ring(), n, n);
    return with_ops(mats.front().ring(), [&](auto ops) { return dp_eval(ops, mats); });
}

Matrix eval_multilinear(const MultilinearPoly& poly, std::span<const Matrix> mats) {
    detail::check_tuple(mats, "eval_multilinear");
    if (mats.size() != poly.degree)
        throw Error(Errc::dimension_mismatch, "polynomial of degree " + std::to_string(poly.degree) + " given " +
                                                  std::to_string(mats.size()) + " arguments");
    const auto& ring = mats.front().ring();
    const auto n = mats.front().rows();
    Matrix out = Matrix::zero(ring, n, n);
    for (const auto& [rank, coeff] : poly.coefficients) {
        if (!(coeff.ring() == ring)) throw Error(Errc::ring_mismatch, "coefficient ring differs from argument ring");
        if (coeff.is_zero()) continue;
        const auto sigma = Permutation::from_rank(poly.degree, rank);
        Matrix term = mats[sigma.word()[0] - 1];
        for (std::size_t k = 1; k < sigma.degree(); ++k) term = term * mats[sigma.word()[k] - 1];
        out = mat_add_scale(out, term, Scalar::one(ring), coeff);
    }
    return out;
}

Matrix consecutive_factor_sum(std::span<const Matrix> mats, std::size_t offset, std::size_t window) {
    detail::check_tuple(mats, "consecutive_factor_sum");
    const std::size_t m = mats.size();
    if (window < 1 || offset + window > m)
        throw Error(Errc::index_out_of_range, "window [" + std::to_string(offset + 1) + ", " +
                                                  std::to_string(offset + window) + "] outside 1.." + std::to_string(m));
    if (m > naive_max_degree)
        throw Error(Errc::degree_too_large, "consecutive_factor_sum enumerates permutations; m <= 8");
    auto contains_block = [&](const std::vector<std::size_t>& word) {
        for (std::size_t start = 0; start + window <= m; ++start) {
            if (word[start] != offset + 1) continue;
            for (std::size_t k = 1; k < window; ++k)
                if (word[start + k] != offset + 1 + k) return false;
            return true;
        }
        return false;
    };
    return with_ops(mats.front().ring(), [&](auto ops) { return naive_sum(ops, mats, contains_block); });
}

Matrix contracted_standard(std::span<const Matrix> mats, std::size_t offset, std::size_t window) {
    detail::check_tuple(mats, "contracted_standard");
    if (window < 1 || offset + window > mats.size()) throw Error(Errc::index_out_of_range, "window out of range");
    std::vector<Matrix> args(mats.begin(), mats.begin() + static_cast<std::ptrdiff_t>(offset));
    Matrix y = mats[offset];
    for (std::size_t k = 1; k < window; ++k) y = y * mats[offset + k];
    args.push_back(std::move(y));
    args.insert(args.end(), mats.begin() + static_cast<std::ptrdiff_t>(offset + window), mats.end());
    return eval_standard_dp(args);
}

}  // namespace matpi
