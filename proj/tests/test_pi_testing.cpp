#include <doctest.h>

#include <random>

#include "matpi/constructions.hpp"
#include "matpi/detail/sampling.hpp"
#include "matpi/lemma_checks.hpp"
#include "matpi/pi_testing.hpp"
#include "test_helpers.hpp"

using namespace matpi;
using namespace matpi::testing;

TEST_CASE("is_standard_identity examples") {
    const auto m2 = full_block_algebra(BlockShape({2}), gf101);
    auto r4 = is_standard_identity(m2, 4, TestMode::exhaustive());
    CHECK(r4.identity);
    CHECK(r4.tuples_checked == 1);
    CHECK_FALSE(r4.probabilistic);

    auto r2 = is_standard_identity(m2, 2, TestMode::exhaustive());
    CHECK_FALSE(r2.identity);
    REQUIRE(r2.witness.has_value());
    CHECK(r2.witness->value == e(2, 1, 2, gf101));
    CHECK(r2.witness->tuple == std::vector<Matrix>{e(2, 1, 1, gf101), e(2, 1, 2, gf101)});

    const auto e12 = full_block_algebra(BlockShape({1, 2}), gf101);
    auto w = is_standard_identity(e12, 4, TestMode::exhaustive());
    CHECK_FALSE(w.identity);
    REQUIRE(w.witness.has_value());
    CHECK(eval_standard_naive(w.witness->tuple) == w.witness->value);
    CHECK_FALSE(w.witness->value.is_zero());
    auto six = is_standard_identity(e12, 6, TestMode::exhaustive());
    CHECK(six.identity);
    CHECK(six.tuples_checked == binomial(7, 6));

    auto vac = is_standard_identity(m2, 5, TestMode::exhaustive());
    CHECK(vac.identity);
    CHECK(vac.tuples_checked == 0);

    CHECK_THROWS_AS(is_standard_identity(m2, 1, TestMode::exhaustive()), Error);
    CHECK_THROWS_AS(is_standard_identity(upper_triangular(2, RingSpec::prime_field(3)), 3, TestMode::randomized(10, 1)),
                    Error);
}

TEST_CASE("exhaustive verdicts do not depend on the thread count") {
    const auto u4 = upper_triangular(4, gf101);
    for (std::size_t t : {5u, 6u, 7u}) {
        auto one = is_standard_identity(u4, t, TestMode::exhaustive(1));
        auto many = is_standard_identity(u4, t, TestMode::exhaustive(4));
        CHECK(one.identity == many.identity);
        CHECK(one.tuples_checked == many.tuples_checked);
        if (one.witness) CHECK(one.witness->indices == many.witness->indices);
    }
}

TEST_CASE("randomized mode") {
    const auto m3 = full_block_algebra(BlockShape({3}), gf101);
    auto id = is_standard_identity(m3, 6, TestMode::randomized(50, 7));
    CHECK(id.identity);
    CHECK(id.probabilistic);
    CHECK(id.tuples_checked == 50);
    auto no = is_standard_identity(m3, 4, TestMode::randomized(50, 7));
    CHECK_FALSE(no.identity);
    REQUIRE(no.witness.has_value());
    CHECK(eval_standard_naive(no.witness->tuple) == no.witness->value);
    auto again = is_standard_identity(m3, 4, TestMode::randomized(50, 7));
    CHECK(again.witness->tuple == no.witness->tuple);
    CHECK(is_standard_identity(full_block_algebra(BlockShape({2}), rat), 4, TestMode::randomized(20, 3)).identity);
}

TEST_CASE("combination pruning agrees with all tuples") {
    std::mt19937_64 rng(41);
    std::vector<SubalgebraBasis> algebras{upper_triangular(2, gf7), radical_T(1, 2, gf7),
                                          full_block_algebra(BlockShape({2}), gf7),
                                          close_generators({gf7, 3, {e(3, 1, 2, gf7), e(3, 2, 2, gf7)}, true})};
    for (const auto& a : algebras) {
        REQUIRE(a.dim() <= 5);
        for (std::size_t t = 2; t <= 4; ++t) {
            bool all_zero = true;
            std::vector<std::size_t> idx(t, 0);
            while (true) {
                std::vector<Matrix> tuple;
                for (auto k : idx) tuple.push_back(a.basis()[k]);
                if (!eval_standard_dp(tuple).is_zero()) all_zero = false;
                std::size_t pos = 0;
                while (pos < t && ++idx[pos] == a.dim()) idx[pos++] = 0;
                if (pos == t) break;
            }
            CHECK(all_zero == is_standard_identity(a, t, TestMode::exhaustive()).identity);
        }
    }
}

TEST_CASE("minimal standard degree") {
    auto m2 = min_standard_degree(full_block_algebra(BlockShape({2}), gf101), 4, TestMode::exhaustive());
    CHECK(m2.degree == std::optional<std::size_t>{4});
    CHECK(m2.parity_cross_check == std::optional<bool>{true});
    CHECK(min_standard_degree(upper_triangular(2, gf101), 4, TestMode::exhaustive()).degree ==
          std::optional<std::size_t>{4});
    CHECK(min_standard_degree(diagonal_embedding(1, 3, gf101), 3, TestMode::exhaustive()).degree ==
          std::optional<std::size_t>{2});
    CHECK(min_standard_degree(upper_triangular(3, gf101), 6, TestMode::exhaustive()).degree ==
          std::optional<std::size_t>{6});
    auto none = min_standard_degree(full_block_algebra(BlockShape({2}), gf101), 3, TestMode::exhaustive());
    CHECK_FALSE(none.degree.has_value());
    CHECK(none.reports.size() == 2);
    // s_2 vanishes on the non-unital radical strip
    CHECK(min_standard_degree(radical_T(1, 2, gf101), 4, TestMode::exhaustive()).degree ==
          std::optional<std::size_t>{2});
}

TEST_CASE("monotonicity on unital algebras") {
    for (const auto& a : {upper_triangular(3, gf101), repetition_algebra(1, 1, gf101),
                          diagonal_embedding(2, 2, gf101), block_diagonal_algebra(BlockShape({1, 2}), gf101)}) {
        bool seen = false;
        for (std::size_t t = 2; t <= 7; ++t) {
            const bool id = is_standard_identity(a, t, TestMode::exhaustive()).identity;
            if (seen) CHECK(id);
            seen = seen || id;
        }
    }
}

TEST_CASE("multilinear identity space") {
    const auto m2 = full_block_algebra(BlockShape({2}), gf101);
    auto four = multilinear_identity_space(m2, 4);
    REQUIRE(four.dimension() == 1);
    const auto s4 = MultilinearPoly::standard(4, gf101);
    for (std::uint64_t r = 0; r < 24; ++r) CHECK(four.basis[0].at(0, r) == s4.coefficients.at(r));
    CHECK(multilinear_identity_space(m2, 3).dimension() == 0);
    CHECK(multilinear_identity_space(full_block_algebra(BlockShape({1}), rat), 2).dimension() == 1);
    CHECK_THROWS_AS(multilinear_identity_space(m2, 7), Error);

    std::mt19937_64 rng(43);
    const auto u2 = upper_triangular(2, gf101);
    auto sp = multilinear_identity_space(u2, 4);
    CHECK(sp.dimension() > 1);
    detail::ScalarSampler sampler(gf101, 99);
    for (const auto& v : sp.basis) {
        const auto poly = MultilinearPoly::from_dense(v);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Matrix> tuple;
            for (int k = 0; k < 4; ++k) tuple.push_back(sampler.element(u2));
            CHECK(eval_multilinear(poly, tuple).is_zero());
        }
    }
}

TEST_CASE("two-block assemblies") {
    const auto scal1 = full_block_algebra(BlockShape({1}), gf101);
    auto r = lemma_blocks_check(scal1, scal1, 2, 2, 200, 5);
    CHECK(r.valid_instance);
    CHECK(r.violations == 0);
    auto r2 = lemma_blocks_check(scal1, full_block_algebra(BlockShape({2}), gf101), 2, 4, 100, 5);
    CHECK(r2.valid_instance);
    CHECK(r2.violations == 0);
    auto bad = lemma_blocks_check(full_block_algebra(BlockShape({2}), gf101), scal1, 2, 2, 10, 5);
    CHECK_FALSE(bad.valid_instance);
    CHECK_FALSE(bad.invalid_reason.empty());
}

TEST_CASE("seeded property sweeps") {
    CHECK(consecutive_factor_sweep(5, 1, 3, 2, 30, 1, gf101).passed());
    CHECK(ur_vanishing_sweep(1, 1, 50, 2, gf101).passed());
    CHECK(repetition_identity_check(1, 1, gf101).identity);
    auto w2 = remark_witness_search(2, 4, 2);
    CHECK_FALSE(w2.identity);
    auto w3 = remark_witness_search(3, 4, 2);
    CHECK_FALSE(w3.identity);
    REQUIRE(w3.witness.has_value());
    CHECK(remark_algebra(3, 4, 2).contains(w3.witness->tuple[0]));
}

TEST_CASE("a non-unital subalgebra of U_3 can fail s_4") {
    // Only e11 e12 e22 e23 is a nonzero ordering, so s_4 = e13.
    auto a = close_generators({rat, 3, {e(3, 1, 1, rat), e(3, 1, 2, rat), e(3, 2, 2, rat), e(3, 2, 3, rat)}, false});
    CHECK(a.dim() == 5);
    CHECK_FALSE(a.is_unital());
    CHECK(a != upper_triangular(3, rat));
    CHECK_FALSE(is_standard_identity(a, 4, TestMode::exhaustive()).identity);
    auto unital = close_generators({rat, 3, a.basis(), true});
    CHECK(unital == upper_triangular(3, rat));
}
