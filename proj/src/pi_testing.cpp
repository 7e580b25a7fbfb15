#include "matpi/pi_testing.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

#include "matpi/detail/sampling.hpp"

namespace matpi {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// The k-combination of {0..n-1} with the given lexicographic rank.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (std::size_t v = next;; ++v) {
            const auto count = binomial(n - v - 1, k - slot - 1);
            if (rank < count) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= count;
        }
    }
    return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

struct RangeHit {
    std::uint64_t rank;
    std::vector<std::size_t> indices;
    std::vector<Matrix> tuple;
    Matrix value;
};

constexpr auto no_hit = std::numeric_limits<std::uint64_t>::max();

// Scans combination ranks [lo, hi) and returns the first nonzero evaluation.
std::optional<RangeHit> scan_range(const SubalgebraBasis& a, std::size_t t, std::uint64_t lo, std::uint64_t hi,
                                   std::atomic<std::uint64_t>& best) {
    auto comb = unrank_combination(a.dim(), t, lo);
    std::vector<Matrix> tuple;
    tuple.reserve(t);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        if (rank > best.load(std::memory_order_relaxed)) return std::nullopt;
        tuple.clear();
        for (auto idx : comb) tuple.push_back(a.basis()[idx]);
        auto value = eval_standard_dp(tuple);
        if (!value.is_zero()) {
            auto seen = best.load();
            while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
            }
            return RangeHit{rank, comb, tuple, std::move(value)};
        }
        if (rank + 1 < hi) next_combination(comb, a.dim());
    }
    return std::nullopt;
}

constexpr const char* exhaustive_justification =
    "s_t is multilinear, so it suffices to evaluate on tuples of basis elements; it is alternating, so tuples "
    "with a repeated element vanish and reordering a tuple only changes the sign. Hence evaluating on every "
    "strictly increasing combination of basis elements decides the identity.";

}  // namespace

IdentityReport is_standard_identity(const SubalgebraBasis& a, std::size_t t, const TestMode& mode,
                                    std::string descriptor) {
    const auto start = Clock::now();
    if (t < 2) throw Error(Errc::invalid_argument, "degree must be at least 2");
    if (t > dp_max_degree) throw Error(Errc::degree_too_large, "degree exceeds " + std::to_string(dp_max_degree));
    require_field(a.ring(), "is_standard_identity");

    IdentityReport report;
    report.algebra = descriptor.empty() ? "subalgebra of M_" + std::to_string(a.n()) + " (dim " +
                                              std::to_string(a.dim()) + ") over " + a.ring().to_string()
                                        : std::move(descriptor);
    report.degree = t;
    report.mode = mode;

    if (t > a.dim()) {
        report.identity = true;
        report.tuples_checked = 0;
        report.justification = "t exceeds dim A: any t elements are linearly dependent and an alternating "
                               "multilinear form vanishes on dependent tuples.";
        report.elapsed_seconds = seconds_since(start);
        return report;
    }

    if (mode.kind == TestMode::Kind::exhaustive) {
        const auto total = binomial(a.dim(), t);
        const auto workers = static_cast<std::uint64_t>(std::max<std::size_t>(1, std::min<std::uint64_t>(mode.threads, total)));
        std::atomic<std::uint64_t> best{no_hit};
        std::vector<std::optional<RangeHit>> hits(workers);
        auto run = [&](std::uint64_t w) {
            const auto lo = total * w / workers, hi = total * (w + 1) / workers;
            hits[w] = scan_range(a, t, lo, hi, best);
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::jthread> pool;
            for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        }
        // The first hit in combination order wins whatever the finishing order.
        const RangeHit* first = nullptr;
        for (const auto& h : hits)
            if (h && (!first || h->rank < first->rank)) first = &*h;
        report.justification = exhaustive_justification;
        if (first) {
            report.identity = false;
            report.tuples_checked = first->rank + 1;
            report.witness = IdentityWitness{first->indices, first->tuple, first->value};
        } else {
            report.identity = true;
            report.tuples_checked = total;
        }
    } else {
        if (mode.trials == 0) throw Error(Errc::invalid_argument, "randomized mode needs at least one trial");
        if (!a.ring().is_rational() && a.ring().modulus() <= t)
            throw Error(Errc::invalid_argument, "randomized mode needs p > t for meaningful sampling");
        detail::ScalarSampler sampler(a.ring(), mode.seed);
        report.probabilistic = true;
        report.justification = "randomized: no counterexample among random elements means 'identity' only "
                               "heuristically; the failure probability is not bounded.";
        report.identity = true;
        for (std::size_t trial = 0; trial < mode.trials; ++trial) {
            std::vector<Matrix> tuple;
            for (std::size_t k = 0; k < t; ++k) tuple.push_back(sampler.element(a));
            ++report.tuples_checked;
            auto value = eval_standard_dp(tuple);
            if (!value.is_zero()) {
                report.identity = false;
                report.probabilistic = false;
                report.witness = IdentityWitness{{}, std::move(tuple), std::move(value)};
                break;
            }
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

IdentityReport is_standard_identity(const RemarkAlgebra& b, std::size_t t) {
    const auto start = Clock::now();
    if (t < 2) throw Error(Errc::invalid_argument, "degree must be at least 2");
    if (t > naive_max_degree) throw Error(Errc::degree_too_large, "spanning-set sweep is capped at t = 8");
    const auto& span = b.spanning_set();

    IdentityReport report;
    report.algebra = "B subset of U_" + std::to_string(b.n()) + "(" + b.ring().to_string() + "), (1,2) entry in (" +
                     std::to_string(b.generator()) + ")";
    report.degree = t;
    report.mode = TestMode::exhaustive();
    report.justification = "all t-tuples from the spanning set are evaluated; no combination pruning over a "
                           "ring with zero divisors.";
    report.identity = true;

    std::vector<std::size_t> idx(t, 0);
    for (;;) {
        std::vector<Matrix> tuple;
        for (auto k : idx) tuple.push_back(span[k]);
        ++report.tuples_checked;
        auto value = eval_standard_dp(tuple);
        if (!value.is_zero()) {
            report.identity = false;
            report.witness = IdentityWitness{idx, std::move(tuple), std::move(value)};
            break;
        }
        std::size_t pos = t;
        while (pos > 0 && idx[pos - 1] + 1 == span.size()) idx[--pos] = 0;
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

MinDegreeResult min_standard_degree(const SubalgebraBasis& a, std::size_t t_max, const TestMode& mode,
                                    std::string descriptor) {
    MinDegreeResult result;
    for (std::size_t t = 2; t <= t_max; ++t) {
        auto report = is_standard_identity(a, t, mode, descriptor);
        const bool found = report.identity;
        result.reports.push_back(std::move(report));
        if (found) {
            result.degree = t;
            break;
        }
    }
    if (result.degree && a.is_unital()) {
        // s_2k and s_(2k+1) vanish together on unital algebras.
        const auto d = *result.degree;
        bool ok = d % 2 == 0;
        if (ok && d + 1 <= dp_max_degree) ok = is_standard_identity(a, d + 1, mode, descriptor).identity;
        result.parity_cross_check = ok;
    }
    return result;
}

namespace {

// Appends to `rows` the products X_w(1)...X_w(t) for every word w in
// lexicographic order, one matrix per permutation.
void monomial_products(const std::vector<Matrix>& args, std::vector<Matrix>& out) {
    const std::size_t t = args.size();
    std::vector<std::size_t> word(t);
    std::vector<bool> used(t, false);
    std::vector<Matrix> prefix;
    prefix.reserve(t);
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == t) {
            out.push_back(prefix.back());
            return;
        }
        for (std::size_t v = 0; v < t; ++v) {
            if (used[v]) continue;
            used[v] = true;
            prefix.push_back(depth == 0 ? args[v] : prefix.back() * args[v]);
            self(self, depth + 1);
            prefix.pop_back();
            used[v] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace

IdentitySpace multilinear_identity_space(const SubalgebraBasis& a, std::size_t t) {
    require_field(a.ring(), "multilinear_identity_space");
    if (t < 1 || t > identity_space_max_degree)
        throw Error(Errc::degree_too_large, "identity space needs 1 <= t <= " + std::to_string(identity_space_max_degree));
    const auto& ring = a.ring();
    const auto cols = static_cast<std::size_t>(factorial(t));
    const auto n = a.n();

    IdentitySpace space;
    space.degree = t;
    Echelon relations(ring, cols);

    if (a.dim() > 0) {
        std::vector<std::size_t> idx(t, 0);
        std::vector<Matrix> monomials;
        for (bool more = true; more && relations.rank() < cols;) {
            std::vector<Matrix> args;
            for (auto k : idx) args.push_back(a.basis()[k]);
            monomials.clear();
            monomial_products(args, monomials);
            ++space.tuples_scanned;
            for (std::size_t r = 0; r < n && relations.rank() < cols; ++r)
                for (std::size_t c = 0; c < n && relations.rank() < cols; ++c) {
                    Matrix row(ring, 1, cols);
                    for (std::size_t s = 0; s < cols; ++s) row.set(0, s, monomials[s].at(r, c));
                    relations.insert(row);
                }
            std::size_t pos = t;
            while (pos > 0 && idx[pos - 1] + 1 == a.dim()) idx[--pos] = 0;
            if (pos == 0)
                more = false;
            else
                ++idx[pos - 1];
        }
    }

    if (relations.rank() == 0) {
        for (std::size_t s = 0; s < cols; ++s) {
            Matrix v(ring, 1, cols);
            v.set(0, s, Scalar::one(ring));
            space.basis.push_back(std::move(v));
        }
        return space;
    }
    Matrix system(ring, relations.rank(), cols);
    for (std::size_t r = 0; r < relations.rank(); ++r)
        for (std::size_t s = 0; s < cols; ++s) system.set(r, s, relations.rows()[r].at(0, s));
    for (auto v : nullspace(system)) {
        std::size_t lead = 0;
        while (v.at(0, lead).is_zero()) ++lead;
        space.basis.push_back(v.scaled(v.at(0, lead).inverse()));
    }
    return space;
}

LemmaBlocksReport lemma_blocks_check(const SubalgebraBasis& a_top, const SubalgebraBasis& a_bot, std::size_t q,
                                     std::size_t r, std::size_t trials, std::uint64_t seed) {
    LemmaBlocksReport rep;
    rep.l = a_top.n();
    rep.m = a_bot.n();
    rep.q = q;
    rep.r = r;
    rep.trials = trials;
    if (!(a_top.ring() == a_bot.ring())) throw Error(Errc::ring_mismatch, "lemma_blocks_check: rings differ");
    if (q < 2 || r < 2) {
        rep.invalid_reason = "q and r must be at least 2";
        return rep;
    }
    if (q > 2 * rep.l || r > 2 * rep.m) {
        rep.invalid_reason = "need q <= 2l and r <= 2m";
        return rep;
    }
    if (!is_standard_identity(a_top, q, TestMode::exhaustive()).identity) {
        rep.invalid_reason = "top block does not satisfy s_" + std::to_string(q);
        return rep;
    }
    if (!is_standard_identity(a_bot, r, TestMode::exhaustive()).identity) {
        rep.invalid_reason = "bottom block does not satisfy s_" + std::to_string(r);
        return rep;
    }
    rep.valid_instance = true;

    const auto& ring = a_top.ring();
    const auto l = rep.l, m = rep.m, n = l + m;
    detail::ScalarSampler sampler(ring, seed);
    auto assemble = [&] {
        const auto x = sampler.element(a_top);
        const auto b = sampler.matrix(l, m);
        const auto y = sampler.element(a_bot);
        Matrix out(ring, n, n);
        for (std::size_t i = 0; i < l; ++i) {
            for (std::size_t j = 0; j < l; ++j) out.set(i, j, x.at(i, j));
            for (std::size_t j = 0; j < m; ++j) out.set(i, l + j, b.at(i, j));
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) out.set(l + i, l + j, y.at(i, j));
        return out;
    };
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<Matrix> tuple;
        for (std::size_t k = 0; k < q + r; ++k) tuple.push_back(assemble());
        if (!eval_standard_dp(tuple).is_zero()) {
            if (!rep.first_violation) rep.first_violation = tuple;
            ++rep.violations;
        }
    }
    return rep;
}

}  // namespace matpi
