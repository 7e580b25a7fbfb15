#include <doctest.h>

#include <random>

#include "matpi/constructions.hpp"
#include "matpi/standard_poly.hpp"
#include "test_helpers.hpp"

using namespace matpi;
using namespace matpi::testing;

TEST_CASE("permutations") {
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation({2, 1, 3}).sign() == -1);
    CHECK(Permutation({3, 1, 2}).sign() == 1);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
    CHECK_THROWS_AS(Permutation({0, 1}), Error);
    for (std::uint64_t r = 0; r < factorial(5); ++r) CHECK(Permutation::from_rank(5, r).rank() == r);
    CHECK(Permutation::from_rank(3, 5).word() == std::vector<std::size_t>{3, 2, 1});
    CHECK(factorial(8) == 40320);
}

TEST_CASE("naive evaluator examples") {
    std::vector<Matrix> xy{e(2, 1, 1, rat), e(2, 1, 2, rat)};
    CHECK(eval_standard_naive(xy) == e(2, 1, 2, rat));
    CHECK(eval_standard_naive(staircase(2, rat)) == e(2, 1, 2, rat));

    std::mt19937_64 rng(1);
    auto tuple = random_tuple(rng, gf7, 4, 3);
    tuple[3] = tuple[1];
    CHECK(eval_standard_naive(tuple).is_zero());
    CHECK(eval_standard_dp(tuple).is_zero());

    CHECK_THROWS_AS(eval_standard_naive(random_tuple(rng, gf7, 9, 1)), Error);
    std::vector<Matrix> mixed{e(2, 1, 1, gf5), e(3, 1, 1, gf5)};
    CHECK_THROWS_AS(eval_standard_naive(mixed), Error);
    std::vector<Matrix> rings{e(2, 1, 1, gf5), e(2, 1, 1, gf7)};
    CHECK_THROWS_AS(eval_standard_dp(rings), Error);
}

TEST_CASE("dp evaluator examples") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        auto xy = random_tuple(rng, gf7, 2, 2);
        CHECK(eval_standard_dp(xy) == xy[0] * xy[1] - xy[1] * xy[0]);
    }
    auto st = staircase(3, rat);
    std::vector<Matrix> tail(st.begin() + 1, st.end());
    CHECK(eval_standard_dp(tail) == eval_standard_naive(tail));
    CHECK(eval_standard_dp(st) == e(3, 1, 3, rat));
}

TEST_CASE("dp equals naive on every unit tuple of M_2 for t <= 6") {
    const auto units = all_units(2, gf101);
    for (std::size_t t = 1; t <= 6; ++t) {
        std::vector<std::size_t> idx(t, 0);
        std::size_t mismatches = 0;
        while (true) {
            std::vector<Matrix> tuple;
            for (auto k : idx) tuple.push_back(units[k]);
            if (!(eval_standard_dp(tuple) == eval_standard_naive(tuple))) ++mismatches;
            std::size_t pos = 0;
            while (pos < t && ++idx[pos] == units.size()) idx[pos++] = 0;
            if (pos == t) break;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("dp equals naive on random tuples at t = 7, 8") {
    std::mt19937_64 rng(13);
    for (std::size_t t : {7u, 8u}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto tuple = random_tuple(rng, gf101, t, 2);
            CHECK(eval_standard_dp(tuple) == eval_standard_naive(tuple));
        }
    }
    auto tuple = random_tuple(rng, rat, 6, 2);
    CHECK(eval_standard_dp(tuple) == eval_standard_naive(tuple));
}

TEST_CASE("antisymmetry, multilinearity and unital reduction") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto tuple = random_tuple(rng, gf101, 5, 3);
        auto swapped = tuple;
        std::swap(swapped[1], swapped[3]);
        CHECK(eval_standard_dp(swapped) == eval_standard_dp(tuple).scaled(Scalar(gf101, -1)));

        const Scalar alpha(gf101, 3), beta(gf101, 41);
        auto x = random_matrix(rng, gf101, 3, 3), y = random_matrix(rng, gf101, 3, 3);
        auto lhs = tuple, tx = tuple, ty = tuple;
        lhs[2] = mat_add_scale(x, y, alpha, beta);
        tx[2] = x;
        ty[2] = y;
        CHECK(eval_standard_dp(lhs) == mat_add_scale(eval_standard_dp(tx), eval_standard_dp(ty), alpha, beta));

        auto with_one = random_tuple(rng, gf101, 5, 3);
        with_one[0] = Matrix::identity(gf101, 3);
        std::vector<Matrix> rest(with_one.begin() + 1, with_one.end());
        CHECK(eval_standard_dp(with_one) == eval_standard_dp(rest));
    }
}

TEST_CASE("multilinear polynomials") {
    std::mt19937_64 rng(19);
    auto tuple = random_tuple(rng, gf7, 4, 2);
    CHECK(eval_multilinear(MultilinearPoly::standard(4, gf7), tuple) == eval_standard_naive(tuple));

    MultilinearPoly mono{3, {{0, Scalar::one(gf7)}}};
    auto three = random_tuple(rng, gf7, 3, 2);
    CHECK(eval_multilinear(mono, three) == three[0] * three[1] * three[2]);

    MultilinearPoly comm{2, {{0, Scalar(rat, 1)}, {1, Scalar(rat, -1)}}};
    std::vector<Matrix> scalars{mat(rat, 1, 1, {3}), mat(rat, 1, 1, {-5})};
    CHECK(eval_multilinear(comm, scalars).is_zero());
    CHECK_THROWS_AS(eval_multilinear(comm, three), Error);
}

TEST_CASE("consecutive factor sum") {
    std::mt19937_64 rng(23);
    auto xs = random_tuple(rng, gf7, 4, 2);
    const Matrix y = xs[1] * xs[2] * xs[3];
    CHECK(consecutive_factor_sum(xs, 1, 3) == xs[0] * y - y * xs[0]);
    CHECK(consecutive_factor_sum(xs, 2, 1) == eval_standard_naive(xs));

    auto qs = random_tuple(rng, rat, 5, 3);
    const Matrix yq = qs[0] * qs[1] * qs[2];
    std::vector<Matrix> contracted{yq, qs[3], qs[4]};
    CHECK(consecutive_factor_sum(qs, 0, 3) == eval_standard_naive(contracted));
    CHECK(contracted_standard(qs, 0, 3) == eval_standard_naive(contracted));

    for (auto [m, i, r] : {std::tuple{6, 2, 3}, {6, 0, 5}, {5, 1, 3}}) {
        auto ts = random_tuple(rng, gf101, m, 2);
        CHECK(consecutive_factor_sum(ts, i, r) == contracted_standard(ts, i, r));
    }
    CHECK_THROWS_AS(consecutive_factor_sum(xs, 2, 3), Error);
    CHECK_THROWS_AS(consecutive_factor_sum(xs, 0, 0), Error);
}
