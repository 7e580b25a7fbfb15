// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// gating criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "matpi/block_structure.hpp"
#include "matpi/constructions.hpp"
#include "matpi/lemma_checks.hpp"
#include "matpi/pi_testing.hpp"
#include "matpi/standard_poly.hpp"

using namespace matpi;

namespace {

const RingSpec gf101 = RingSpec::prime_field(101);
const RingSpec rat = RingSpec::rationals();

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool passed = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (passed) note << "first failure: " << what << "; ";
            passed = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body, bool gating = true) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.passed = false;
        out.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = out.passed ? "PASS" : (gating ? "FAIL" : "INFO");
    std::printf("%s criterion %2d: %s [%.2f s] %s\n", tag, id, title, secs, out.note.str().c_str());
    std::fflush(stdout);
    if (!out.passed && gating) ++failures;
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j, RingSpec ring) { return matrix_unit(n, i, j, ring); }

// Unital closure of a few random combinations of upper matrix units of U_n.
SubalgebraBasis random_upper_closure(std::mt19937_64& rng, std::size_t n, std::size_t gens, double density) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<std::int64_t> coeff(1, 100);
    GeneratorSet g{gf101, n, {}, true};
    for (std::size_t k = 0; k < gens; ++k) {
        Matrix x(gf101, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r; c < n; ++c)
                if (keep(rng)) x.set(r, c, Scalar(gf101, coeff(rng)));
        g.gens.push_back(x);
    }
    return close_generators(g);
}

}  // namespace

int main() {
    criterion(1, "staircase: s_(2n-1)(e11, e12, ..., enn) = e_1n for n = 2..6 over Q and GF(101)", [](Outcome& o) {
        for (auto ring : {rat, gf101})
            for (std::size_t n = 2; n <= 6; ++n)
                o.require(eval_standard_dp(staircase(n, ring)) == unit(n, 1, n, ring),
                          "n=" + std::to_string(n) + " over " + ring.to_string());
    });

    criterion(2, "s_2n is an identity of M_n (exhaustive n = 2, 3, 4; randomized n = 5)", [](Outcome& o) {
        const std::uint64_t expect[] = {0, 0, 1, 84, 12870};
        std::uint64_t total = 0;
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto r = is_standard_identity(full_block_algebra(BlockShape({n}), gf101), 2 * n,
                                                TestMode::exhaustive(workers()));
            o.require(r.identity, "M_" + std::to_string(n));
            o.require(r.tuples_checked == expect[n], "combination count for n=" + std::to_string(n));
            total += r.tuples_checked;
        }
        const auto r5 = is_standard_identity(full_block_algebra(BlockShape({5}), gf101), 10,
                                             TestMode::randomized(2000, 42));
        o.require(r5.identity && r5.tuples_checked == 2000, "M_5 randomized");
        o.note << total << " combinations, 2000 random tuples for n=5";
    });

    criterion(3, "s_(2n-2) is not an identity of M_n for n = 2..4, witness re-verified by the naive evaluator",
              [](Outcome& o) {
                  for (std::size_t n = 2; n <= 4; ++n) {
                      const auto r = is_standard_identity(full_block_algebra(BlockShape({n}), gf101), 2 * n - 2,
                                                          TestMode::exhaustive());
                      o.require(!r.identity && r.witness, "witness for n=" + std::to_string(n));
                      if (r.witness) {
                          const auto v = eval_standard_naive(r.witness->tuple);
                          o.require(v == r.witness->value && !v.is_zero(), "naive re-evaluation n=" + std::to_string(n));
                      }
                  }
              });

    criterion(4, "multilinear identities of M_2: degree 4 is spanned by s_4, degree 3 has none", [](Outcome& o) {
        const auto m2 = full_block_algebra(BlockShape({2}), gf101);
        const auto four = multilinear_identity_space(m2, 4);
        o.require(four.dimension() == 1, "dimension at t=4");
        if (four.dimension() == 1) {
            const auto s4 = MultilinearPoly::standard(4, gf101);
            for (std::uint64_t r = 0; r < 24; ++r)
                o.require(four.basis[0].at(0, r) == s4.coefficients.at(r), "sign vector entry " + std::to_string(r));
        }
        o.require(multilinear_identity_space(m2, 3).dimension() == 0, "dimension at t=3");
    });

    criterion(5, "simple proper subalgebras: diag(x, x) in M_4 satisfies s_4 and s_6; scalars in M_3 satisfy s_2",
              [](Outcome& o) {
                  const auto d = diagonal_embedding(2, 2, gf101);
                  const auto s4 = is_standard_identity(d, 4, TestMode::exhaustive());
                  o.require(s4.identity && s4.tuples_checked == 1, "s_4 on diag(x, x)");
                  o.require(is_standard_identity(d, 6, TestMode::exhaustive()).identity, "s_6 on diag(x, x)");
                  o.require(is_standard_identity(diagonal_embedding(1, 3, gf101), 2, TestMode::exhaustive()).identity,
                            "s_2 on scalars");
              });

    criterion(6, "two-block assemblies satisfy s_(q+r), 500 seeded trials per configuration", [](Outcome& o) {
        const auto s1 = full_block_algebra(BlockShape({1}), gf101);
        const auto m2 = full_block_algebra(BlockShape({2}), gf101);
        const auto d2 = block_diagonal_algebra(BlockShape({1, 1}), gf101);
        struct C {
            const SubalgebraBasis& top;
            const SubalgebraBasis& bot;
            std::size_t q, r;
        };
        std::uint64_t seed = 100;
        for (const C& c : {C{s1, s1, 2, 2}, C{s1, m2, 2, 4}, C{d2, s1, 2, 2}}) {
            const auto r = lemma_blocks_check(c.top, c.bot, c.q, c.r, 500, ++seed);
            o.require(r.valid_instance && r.violations == 0,
                      "l=" + std::to_string(r.l) + " m=" + std::to_string(r.m));
        }
    });

    criterion(7, "consecutive-factor sum equals the contracted standard polynomial, 100 tuples each", [](Outcome& o) {
        std::uint64_t seed = 200;
        for (auto [m, i, r] : {std::tuple<std::size_t, std::size_t, std::size_t>{4, 1, 3}, {5, 1, 3}, {6, 2, 3}, {6, 0, 5}}) {
            const auto s = consecutive_factor_sweep(m, i, r, 2, 100, ++seed, gf101);
            o.require(s.passed(), s.name);
        }
    });

    criterion(8, "ur corner vanishes (200 tuples) and repetition algebras satisfy s_2(l+m) exhaustively",
              [](Outcome& o) {
                  std::uint64_t seed = 300;
                  for (auto [l, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}}) {
                      o.require(ur_vanishing_sweep(l, m, 200, ++seed, gf101).passed(),
                                "ur l=" + std::to_string(l) + " m=" + std::to_string(m));
                      const auto r = repetition_identity_check(l, m, gf101, TestMode::exhaustive(workers()));
                      o.require(r.identity, "repetition l=" + std::to_string(l) + " m=" + std::to_string(m));
                      o.note << "(" << l << "," << m << "): " << r.tuples_checked << " combinations; ";
                  }
              });

    criterion(9, "classification verdict is full block triangular iff s_(2n-2) fails, corpus of unital algebras",
              [](Outcome& o) {
                  std::vector<std::pair<SubalgebraBasis, BlockShape>> corpus;
                  for (std::size_t n = 2; n <= 4; ++n)
                      for (const auto& s : compositions(n)) corpus.emplace_back(full_block_algebra(s, gf101), s);
                  corpus.emplace_back(repetition_algebra(1, 1, gf101), BlockShape::ones(3));
                  corpus.emplace_back(repetition_algebra(1, 2, gf101), BlockShape({1, 2, 1}));
                  for (auto parts : {std::vector<std::size_t>{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 2}, {1, 3}})
                      corpus.emplace_back(block_diagonal_algebra(BlockShape(parts), gf101), BlockShape(parts));
                  // coupled blocks 1-2, split from 3 (and 4)
                  corpus.emplace_back(close_generators({gf101, 3, {unit(3, 1, 2, gf101), unit(3, 1, 1, gf101)}, true}),
                                      BlockShape::ones(3));
                  corpus.emplace_back(
                      close_generators({gf101, 4, {unit(4, 1, 2, gf101), unit(4, 1, 1, gf101), unit(4, 3, 3, gf101)}, true}),
                      BlockShape::ones(4));
                  corpus.emplace_back(diagonal_embedding(2, 2, gf101), BlockShape({2, 2}));
                  corpus.emplace_back(diagonal_embedding(1, 3, gf101), BlockShape::ones(3));
                  corpus.emplace_back(diagonal_embedding(1, 3, gf101), BlockShape({3}));
                  corpus.emplace_back(close_generators({gf101, 2, {unit(2, 1, 2, gf101)}, true}), BlockShape::ones(2));
                  // GF(103^2) as the companion algebra of x^2 + 1 (irreducible since 103 = 3 mod 4)
                  const auto gf103 = RingSpec::prime_field(103);
                  const std::int64_t j_entries[] = {0, -1, 1, 0};
                  const auto jm = Matrix::from_ints(gf103, 2, 2, j_entries);
                  corpus.emplace_back(close_generators({gf103, 2, {jm}, true}), BlockShape({2}));
                  // Q(i) inside the top block of E_(2,1)
                  const auto jq = Matrix::from_ints(rat, 2, 2, j_entries);
                  Matrix j3(rat, 3, 3);
                  for (std::size_t r = 0; r < 2; ++r)
                      for (std::size_t c = 0; c < 2; ++c) j3.set(r, c, jq.at(r, c));
                  corpus.emplace_back(close_generators({rat, 3, {j3, unit(3, 1, 3, rat), unit(3, 2, 3, rat)}, true}),
                                      BlockShape({2, 1}));
                  std::mt19937_64 rng(2024);
                  for (int k = 0; k < 12; ++k)
                      corpus.emplace_back(random_upper_closure(rng, 4, 1 + k % 3, 0.35), BlockShape::ones(4));

                  std::size_t full = 0, low = 0, disagreements = 0;
                  for (const auto& [a, shape] : corpus) {
                      const auto v = classify(a, shape);
                      o.require(v.kind != ClassificationVerdict::Kind::not_canonical, "canonical input " + v.detail);
                      const auto id = is_standard_identity(a, 2 * a.n() - 2, TestMode::exhaustive(workers()));
                      const bool fb = v.kind == ClassificationVerdict::Kind::full_block_triangular;
                      (fb ? full : low) += 1;
                      if (fb == id.identity) {
                          ++disagreements;
                          o.require(false, v.summary() + " on " + shape.to_string());
                      }
                  }
                  o.require(corpus.size() >= 30, "corpus size");
                  o.note << corpus.size() << " algebras, " << full << " full block triangular, " << low
                         << " satisfying s_(2n-2), " << disagreements << " disagreements";
              });

    criterion(10, "proper unital subalgebras of U_3 (unit subsets) and 20 random ones of U_4 satisfy s_(2n-2)",
              [](Outcome& o) {
                  const auto u3 = upper_triangular(3, gf101);
                  const auto units = u3.basis();
                  std::size_t proper = 0, whole = 0;
                  for (unsigned mask = 1; mask + 1 < (1u << units.size()); ++mask) {
                      GeneratorSet g{gf101, 3, {}, true};
                      for (std::size_t k = 0; k < units.size(); ++k)
                          if (mask & (1u << k)) g.gens.push_back(units[k]);
                      const auto a = close_generators(g);
                      const bool id = is_standard_identity(a, 4, TestMode::exhaustive()).identity;
                      if (a == u3) {
                          ++whole;
                          o.require(!id, "closure equal to U_3 must fail s_4");
                      } else {
                          ++proper;
                          o.require(id, "proper closure fails s_4");
                      }
                  }
                  const auto u4 = upper_triangular(4, gf101);
                  std::mt19937_64 rng(77);
                  std::size_t found = 0, draws = 0;
                  while (found < 20 && draws < 10000) {
                      ++draws;
                      const auto a = random_upper_closure(rng, 4, 1 + draws % 3, 0.3);
                      if (a == u4) continue;
                      ++found;
                      o.require(is_standard_identity(a, 6, TestMode::exhaustive()).identity, "random proper U_4 subalgebra");
                  }
                  o.require(found == 20, "20 proper subalgebras of U_4");
                  o.note << proper << " of 62 closures proper (all satisfy s_4), " << whole
                         << " generate U_3 (all fail s_4); " << found << " random U_4 subalgebras";
              });

    criterion(11, "Z/4 algebra with (1,2) entry in (2) fails s_(2n-2) for n = 2, 3", [](Outcome& o) {
        for (std::size_t n : {2u, 3u}) {
            const auto r = remark_witness_search(n, 4, 2);
            o.require(!r.identity && r.witness && !eval_standard_naive(r.witness->tuple).is_zero(),
                      "n=" + std::to_string(n));
            if (r.witness) o.note << "n=" << n << " value " << r.witness->value.to_string() << "; ";
        }
    });

    criterion(12, "rad(E_(l,m)) = T_(l,m) for l + m <= 5 and rad(M_n) = 0, over Q and GF(101)", [](Outcome& o) {
        for (auto ring : {rat, gf101})
            for (std::size_t n = 1; n <= 5; ++n) {
                o.require(jacobson_radical(full_block_algebra(BlockShape({n}), ring)).dim() == 0,
                          "rad(M_" + std::to_string(n) + ")");
                for (std::size_t l = 1; l < n; ++l)
                    o.require(jacobson_radical(full_block_algebra(BlockShape({l, n - l}), ring)) ==
                                  radical_T(l, n - l, ring),
                              "rad(E_(" + std::to_string(l) + "," + std::to_string(n - l) + "))");
            }
    });

    criterion(13, "subset-DP evaluator equals the naive oracle (unit tuples t <= 6, 500 random at t = 7, 8)",
              [](Outcome& o) {
                  std::vector<Matrix> units;
                  for (std::size_t i = 1; i <= 2; ++i)
                      for (std::size_t j = 1; j <= 2; ++j) units.push_back(unit(2, i, j, gf101));
                  std::size_t compared = 0;
                  for (std::size_t t = 1; t <= 6; ++t) {
                      std::vector<std::size_t> idx(t, 0);
                      while (true) {
                          std::vector<Matrix> tuple;
                          for (auto k : idx) tuple.push_back(units[k]);
                          o.require(eval_standard_dp(tuple) == eval_standard_naive(tuple), "unit tuple");
                          ++compared;
                          std::size_t pos = 0;
                          while (pos < t && ++idx[pos] == units.size()) idx[pos++] = 0;
                          if (pos == t) break;
                      }
                  }
                  std::mt19937_64 rng(13);
                  std::uniform_int_distribution<std::int64_t> d(0, 100);
                  for (std::size_t t : {7u, 8u})
                      for (int trial = 0; trial < 500; ++trial) {
                          std::vector<Matrix> tuple;
                          for (std::size_t k = 0; k < t; ++k) {
                              const std::int64_t v[] = {d(rng), d(rng), d(rng), d(rng)};
                              tuple.push_back(Matrix::from_ints(gf101, 2, 2, v));
                          }
                          o.require(eval_standard_dp(tuple) == eval_standard_naive(tuple), "random tuple");
                          ++compared;
                      }
                  o.note << compared << " tuples compared";
              });

    criterion(13, "throughput: subset-DP at least 100x the naive evaluator at t = 8 (informative)", [](Outcome& o) {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<std::int64_t> d(0, 100);
        std::vector<Matrix> tuple;
        for (int k = 0; k < 8; ++k) {
            const std::int64_t v[] = {d(rng), d(rng), d(rng), d(rng)};
            tuple.push_back(Matrix::from_ints(gf101, 2, 2, v));
        }
        auto rate = [&](auto eval) {
            std::size_t count = 0;
            const auto start = std::chrono::steady_clock::now();
            double secs = 0;
            do {
                (void)eval(tuple);
                ++count;
                secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            } while (secs < 0.3);
            return count / secs;
        };
        const double naive = rate(eval_standard_naive), dp = rate(eval_standard_dp);
        o.note << "ratio " << dp / naive;
        o.require(dp >= 100 * naive, "speedup below 100x");
    }, false);

    std::printf("%s: %d gating criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
