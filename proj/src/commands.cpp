#include "matpi/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "matpi/detail/sampling.hpp"

namespace matpi {

namespace {

using Clock = std::chrono::steady_clock;

// Largest combination count swept exhaustively when the mode is automatic.
constexpr std::uint64_t auto_exhaustive_limit = 2'000'000;

class Run {
public:
    Run(std::string name, const CommandOptions& opt, const AlgebraSpec* spec, json params)
        : opt_(opt), start_(Clock::now()) {
        std::ostringstream echo;
        echo << name;
        for (const auto& [k, v] : params.items()) echo << " --" << k << " " << (v.is_string() ? v.get<std::string>() : v.dump());
        report_.command = echo.str();
        json digest{{"command", name}, {"params", params}, {"spec", spec ? json(spec->canonical) : json(nullptr)}};
        report_.input_digest = sha256_hex(digest.dump());
    }

    void seed(std::uint64_t s) { report_.seed = s; }

    CheckResult& add(std::string name, bool passed, json detail, bool gating = true) {
        report_.checks.push_back({std::move(name), passed, gating, std::move(detail)});
        return report_.checks.back();
    }

    CommandResult finish(std::optional<int> code = std::nullopt) {
        if (opt_.timing) report_.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        CommandResult res{std::move(report_), exit_consistent};
        res.exit_code = code ? *code : (res.report.all_passed() ? exit_consistent : exit_claim_failed);
        return res;
    }

private:
    const CommandOptions& opt_;
    Clock::time_point start_;
    RunReport report_;
};

TestMode pick_mode(const CommandOptions& opt, std::uint64_t combinations, std::size_t default_trials) {
    using M = CommandOptions::Mode;
    const auto trials = opt.trials.value_or(default_trials);
    if (opt.mode == M::randomized || (opt.mode == M::automatic && combinations > auto_exhaustive_limit))
        return TestMode::randomized(trials, opt.seed);
    return TestMode::exhaustive(opt.threads);
}

void require_field_ring(const RingSpec& ring) {
    if (!ring.is_field()) throw Error(Errc::unsupported_ring, "this command needs --ring gf:<p> or --ring q");
}

std::optional<AlgebraSpec> read_spec(const CommandOptions& opt) {
    if (!opt.spec) return std::nullopt;
    return load_spec(*opt.spec);
}

json spec_param(const CommandOptions& opt) { return opt.spec ? json(opt.spec->filename().string()) : json(nullptr); }

// Re-evaluates a witness with the naive oracle where it is affordable.
bool reverify(const IdentityWitness& w) {
    const auto& tuple = w.tuple;
    const auto value = tuple.size() <= naive_max_degree ? eval_standard_naive(tuple) : eval_standard_dp(tuple);
    return value == w.value && !value.is_zero();
}

json witness_check_detail(const IdentityReport& r, bool timing) {
    json d = to_json(r, timing);
    if (r.witness) d["reverified_by"] = r.degree <= naive_max_degree ? "naive" : "dp";
    return d;
}

}  // namespace

CommandResult cmd_verify_al(const CommandOptions& opt) {
    const std::size_t n = opt.n.value_or(3);
    if (n < 1) throw Error(Errc::invalid_argument, "--n must be at least 1");
    require_field_ring(opt.ring);
    using M = CommandOptions::Mode;
    if (opt.mode == M::exhaustive && n > 4)
        throw Error(Errc::invalid_argument, "exhaustive mode supports n <= 4; use --mode randomized");
    const bool randomized = opt.mode == M::randomized || (opt.mode == M::automatic && n > 4);
    const TestMode mode =
        randomized ? TestMode::randomized(opt.trials.value_or(2000), opt.seed) : TestMode::exhaustive(opt.threads);

    json params{{"n", n}, {"ring", opt.ring.to_string()}, {"mode", randomized ? "randomized" : "exhaustive"}};
    if (randomized) params["trials"] = mode.trials, params["seed"] = opt.seed;
    Run run("verify-al", opt, nullptr, params);
    if (randomized) run.seed(opt.seed);

    const auto mn = full_block_algebra(BlockShape({n}), opt.ring);
    const std::string desc = "M_" + std::to_string(n) + " over " + opt.ring.to_string();

    const auto top = is_standard_identity(mn, 2 * n, mode, desc);
    run.add("s_" + std::to_string(2 * n) + " is an identity of M_" + std::to_string(n), top.identity,
            to_json(top, opt.timing));

    if (n >= 2) {
        const auto r = is_standard_identity(mn, 2 * n - 2, mode, desc);
        const bool ok = !r.identity && r.witness && reverify(*r.witness);
        run.add("s_" + std::to_string(2 * n - 2) + " is not an identity of M_" + std::to_string(n), ok,
                witness_check_detail(r, opt.timing));
    }

    // The staircase is itself the witness for s_(2n-1).
    const auto st = staircase(n, opt.ring);
    const auto value = eval_standard_dp(st);
    const auto expect = matrix_unit(n, 1, n, opt.ring);
    if (n >= 2) {
        IdentityReport r;
        r.algebra = desc;
        r.degree = 2 * n - 1;
        r.mode = mode;
        r.identity = value.is_zero();
        r.tuples_checked = 1;
        r.justification = "the staircase sequence lies in M_n and gives a nonzero value";
        if (!r.identity) r.witness = IdentityWitness{{}, st, value};
        const bool ok = !r.identity && reverify(*r.witness);
        run.add("s_" + std::to_string(2 * n - 1) + " is not an identity of M_" + std::to_string(n), ok,
                witness_check_detail(r, opt.timing));
    }
    run.add("s_" + std::to_string(2 * n - 1) + "(staircase) = e_1" + std::to_string(n), value == expect,
            json{{"value", to_json(value)}, {"expected", to_json(expect)}});
    return run.finish();
}

CommandResult cmd_classify(const CommandOptions& opt) {
    const auto spec = read_spec(opt);
    if (!spec) throw Error(Errc::invalid_argument, "classify needs --spec <file>");
    if (!spec->shape) throw Error(Errc::invalid_argument, "classify needs a 'shape' in the spec file");
    if (spec->is_remark()) throw Error(Errc::unsupported_ring, "classification needs a field; the remark algebra is over Z/m");
    if (spec->n < 2) throw Error(Errc::invalid_argument, "classify needs n >= 2");

    const auto a = spec->build();
    const std::size_t n = spec->n, t = 2 * n - 2;
    const TestMode mode = pick_mode(opt, binomial(a.dim(), t), 2000);
    json params{{"spec", spec_param(opt)}, {"mode", mode.kind == TestMode::Kind::exhaustive ? "exhaustive" : "randomized"}};
    if (mode.kind == TestMode::Kind::randomized) params["trials"] = mode.trials, params["seed"] = mode.seed;
    Run run("classify", opt, &*spec, params);
    if (mode.kind == TestMode::Kind::randomized) run.seed(mode.seed);

    ClassificationVerdict verdict;
    try {
        verdict = classify(a, *spec->shape);
    } catch (const Error& e) {
        if (e.code() != Errc::contract_violation) throw;
        run.add("classification", false, json{{"error", e.what()}, {"algebra", spec->descriptor()}});
        return run.finish(exit_claim_failed);
    }
    const auto id = is_standard_identity(a, t, mode, spec->descriptor());

    json detail{{"algebra", spec->descriptor()},
                {"dim", a.dim()},
                {"unital", a.is_unital()},
                {"verdict", to_json(verdict)},
                {"s_2n-2", to_json(id, opt.timing)}};
    if (verdict.kind == ClassificationVerdict::Kind::not_canonical) {
        detail["note"] = "input is not in canonical block coordinates for this shape";
        run.add("classification", false, std::move(detail), false);
        return run.finish(exit_usage);
    }
    const bool full = verdict.kind == ClassificationVerdict::Kind::full_block_triangular;
    const bool consistent = full == !id.identity;
    detail["consistent"] = consistent;
    bool gating = true;
    if (!a.is_unital()) {
        gating = false;
        detail["note"] = "the block-triangular classification concerns unital subalgebras; informative only";
    } else if (!consistent) {
        detail["note"] = "contradiction: the structural verdict and s_2n-2 disagree";
    }
    run.add("classification agrees with s_" + std::to_string(t), consistent, std::move(detail), gating);
    return run.finish();
}

CommandResult cmd_min_degree(const CommandOptions& opt) {
    const auto spec = read_spec(opt);
    const std::size_t n = spec ? spec->n : opt.n.value_or(2);
    const std::size_t t_max = opt.degree.value_or(2 * n);
    if (t_max < 2) throw Error(Errc::invalid_argument, "--degree must be at least 2");

    if (spec && spec->is_remark()) {
        const auto b = spec->build_remark();
        const double cost = std::pow(static_cast<double>(b.spanning_set().size()), static_cast<double>(t_max));
        if (cost > 2e7) throw Error(Errc::degree_too_large, "remark sweep over all spanning tuples is too large");
        Run run("min-degree", opt, &*spec, json{{"spec", spec_param(opt)}, {"degree", t_max}});
        json per = json::array();
        std::optional<std::size_t> found;
        for (std::size_t t = 2; t <= t_max && !found; ++t) {
            const auto r = is_standard_identity(b, t);
            per.push_back(to_json(r, opt.timing));
            if (r.identity) found = t;
        }
        json detail{{"algebra", spec->descriptor()}, {"degree", found ? json(*found) : json(nullptr)}, {"reports", per}};
        run.add("minimal standard degree <= " + std::to_string(t_max), found.has_value(), std::move(detail),
                t_max >= 2 * n);
        return run.finish();
    }

    std::optional<SubalgebraBasis> a;
    std::string desc;
    if (spec) {
        a = spec->build();
        desc = spec->descriptor();
    } else {
        require_field_ring(opt.ring);
        a = full_block_algebra(BlockShape({n}), opt.ring);
        desc = "M_" + std::to_string(n) + " over " + opt.ring.to_string();
    }
    std::uint64_t worst = 0;
    for (std::size_t t = 2; t <= t_max; ++t) worst = std::max(worst, binomial(a->dim(), t));
    const TestMode mode = pick_mode(opt, worst, 2000);
    json params = spec ? json{{"spec", spec_param(opt)}} : json{{"n", n}, {"ring", opt.ring.to_string()}};
    params["degree"] = t_max;
    params["mode"] = mode.kind == TestMode::Kind::exhaustive ? "exhaustive" : "randomized";
    if (mode.kind == TestMode::Kind::randomized) params["trials"] = mode.trials, params["seed"] = mode.seed;
    Run run("min-degree", opt, spec ? &*spec : nullptr, params);
    if (mode.kind == TestMode::Kind::randomized) run.seed(mode.seed);

    const auto res = min_standard_degree(*a, t_max, mode, desc);
    json per = json::array();
    for (const auto& r : res.reports) per.push_back(to_json(r, opt.timing));
    json detail{{"algebra", desc},
                {"dim", a->dim()},
                {"unital", a->is_unital()},
                {"degree", res.degree ? json(*res.degree) : json(nullptr)},
                {"reports", per}};
    // Any subalgebra of M_n satisfies s_2n, so a sweep reaching 2n must stop.
    run.add("minimal standard degree <= " + std::to_string(t_max), res.degree.has_value(), std::move(detail),
            t_max >= 2 * n);
    if (res.parity_cross_check)
        run.add("unital parity: minimal degree even and s_(d+1) vanishes", *res.parity_cross_check,
                json{{"degree", *res.degree}});
    return run.finish();
}

CommandResult cmd_identity_space(const CommandOptions& opt) {
    const auto spec = read_spec(opt);
    if (spec && spec->is_remark()) throw Error(Errc::unsupported_ring, "identity spaces need a field");
    const std::size_t n = spec ? spec->n : opt.n.value_or(2);
    const std::size_t t = opt.degree.value_or(std::min<std::size_t>(2 * n, identity_space_max_degree));
    const auto a = spec ? spec->build() : (require_field_ring(opt.ring), full_block_algebra(BlockShape({n}), opt.ring));
    const bool full_matrix = !spec || a == full_block_algebra(BlockShape({n}), a.ring());
    const std::string desc = spec ? spec->descriptor() : "M_" + std::to_string(n) + " over " + opt.ring.to_string();

    json params = spec ? json{{"spec", spec_param(opt)}} : json{{"n", n}, {"ring", opt.ring.to_string()}};
    params["degree"] = t;
    params["seed"] = opt.seed;
    Run run("identity-space", opt, spec ? &*spec : nullptr, params);
    run.seed(opt.seed);

    const auto space = multilinear_identity_space(a, t);
    json detail = to_json(space);
    detail["algebra"] = desc;
    bool ok = true;
    if (full_matrix && t <= 2 * n) {
        // Below 2n nothing vanishes on M_n; at 2n only multiples of s_2n do.
        if (t < 2 * n) {
            ok = space.dimension() == 0;
            detail["expected"] = "dimension 0";
        } else {
            const auto s = MultilinearPoly::standard(t, a.ring());
            ok = space.dimension() == 1;
            for (std::uint64_t r = 0; ok && r < factorial(t); ++r) ok = space.basis[0].at(0, r) == s.coefficients.at(r);
            detail["expected"] = "dimension 1 spanned by the permutation signs";
        }
    }
    run.add("multilinear identities of degree " + std::to_string(t), ok, std::move(detail), full_matrix && t <= 2 * n);

    const std::size_t trials = opt.trials.value_or(100);
    detail::ScalarSampler sampler(a.ring(), opt.seed);
    std::size_t failures = 0;
    for (const auto& v : space.basis) {
        const auto poly = MultilinearPoly::from_dense(v);
        for (std::size_t k = 0; k < trials; ++k) {
            std::vector<Matrix> tuple;
            for (std::size_t i = 0; i < t; ++i) tuple.push_back(sampler.element(a));
            if (!eval_multilinear(poly, tuple).is_zero()) ++failures;
        }
    }
    run.add("identities vanish on fresh random tuples", failures == 0,
            json{{"trials_per_identity", trials}, {"failures", failures}});
    return run.finish();
}

CommandResult cmd_lemma_suite(const CommandOptions& opt) {
    require_field_ring(opt.ring);
    const auto& ring = opt.ring;
    json params{{"ring", ring.to_string()}, {"seed", opt.seed}};
    if (opt.trials) params["trials"] = *opt.trials;
    Run run("lemma-suite", opt, nullptr, params);
    run.seed(opt.seed);
    std::uint64_t stream = 0;
    auto next_seed = [&] { return opt.seed * 1000003 + ++stream; };

    const std::size_t cf_trials = opt.trials.value_or(100);
    for (auto [m, i, r] : {std::tuple<std::size_t, std::size_t, std::size_t>{4, 1, 3}, {5, 1, 3}, {6, 2, 3}, {6, 0, 5}}) {
        const auto s = consecutive_factor_sweep(m, i, r, 2, cf_trials, next_seed(), ring);
        run.add("consecutive factor sum, m=" + std::to_string(m) + " r=" + std::to_string(r), s.passed(), to_json(s));
    }
    {
        // Even windows have no closed form to compare against; recorded only.
        const auto s = consecutive_factor_sweep(4, 1, 2, 2, cf_trials, next_seed(), ring);
        run.add("consecutive factor sum, m=4 r=2 (even window)", true,
                json{{"agreements", s.trials - s.failures}, {"trials", s.trials}}, false);
    }

    const std::size_t ur_trials = opt.trials.value_or(200);
    for (auto [l, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}}) {
        const auto s = ur_vanishing_sweep(l, m, ur_trials, next_seed(), ring);
        run.add("ur corner of s_2(l+m) vanishes, l=" + std::to_string(l) + " m=" + std::to_string(m), s.passed(),
                to_json(s));
    }
    for (auto [l, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}}) {
        const auto r = repetition_identity_check(l, m, ring, TestMode::exhaustive(opt.threads));
        run.add("repetition algebra satisfies s_" + std::to_string(2 * (l + m)) + ", l=" + std::to_string(l) +
                    " m=" + std::to_string(m),
                r.identity, to_json(r, opt.timing));
    }

    const std::size_t lb_trials = opt.trials.value_or(500);
    const auto scalars = full_block_algebra(BlockShape({1}), ring);
    const auto m2 = full_block_algebra(BlockShape({2}), ring);
    const auto diag2 = block_diagonal_algebra(BlockShape({1, 1}), ring);
    struct Config {
        const SubalgebraBasis* top;
        const SubalgebraBasis* bot;
        std::size_t q, r;
        const char* label;
    };
    for (const auto& c : {Config{&scalars, &scalars, 2, 2, "scalars | scalars"},
                          Config{&scalars, &m2, 2, 4, "scalars | M_2"},
                          Config{&diag2, &scalars, 2, 2, "diagonal 2x2 | scalars"}}) {
        const auto r = lemma_blocks_check(*c.top, *c.bot, c.q, c.r, lb_trials, next_seed());
        json d = to_json(r);
        d["blocks"] = c.label;
        run.add("block assembly satisfies s_" + std::to_string(c.q + c.r) + " (" + c.label + ")",
                r.valid_instance && r.violations == 0, std::move(d));
    }

    for (std::size_t n : {2u, 3u}) {
        const auto r = remark_witness_search(n, 4, 2);
        const bool ok = !r.identity && r.witness && eval_standard_dp(r.witness->tuple) == r.witness->value;
        run.add("Z/4 algebra with (1,2) entry in (2) fails s_" + std::to_string(2 * n - 2) + ", n=" + std::to_string(n),
                ok, to_json(r, opt.timing));
    }
    return run.finish();
}

CommandResult cmd_bench(const CommandOptions& opt) {
    require_field_ring(opt.ring);
    const std::size_t size = opt.n.value_or(2);
    const std::size_t t_max = opt.degree.value_or(naive_max_degree);
    if (t_max < 2 || t_max > dp_max_degree) throw Error(Errc::degree_too_large, "--degree must lie in [2, 24]");
    json params{{"n", size}, {"ring", opt.ring.to_string()}, {"degree", t_max}, {"seed", opt.seed}};
    Run run("bench", opt, nullptr, params);
    run.seed(opt.seed);

    detail::ScalarSampler sampler(opt.ring, opt.seed);
    constexpr double budget = 0.15;
    auto measure = [&](const std::function<Matrix(std::span<const Matrix>)>& eval, std::size_t t) {
        std::vector<std::vector<Matrix>> pool;
        for (int k = 0; k < 8; ++k) {
            std::vector<Matrix> tuple;
            for (std::size_t i = 0; i < t; ++i) tuple.push_back(sampler.matrix(size, size));
            pool.push_back(std::move(tuple));
        }
        std::size_t evals = 0;
        const auto start = Clock::now();
        double elapsed = 0;
        do {
            (void)eval(pool[evals % pool.size()]);
            ++evals;
            elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        } while (elapsed < budget);
        return static_cast<double>(evals) / elapsed;
    };

    json rows = json::array();
    std::optional<double> naive_top, dp_top;
    for (std::size_t t = 2; t <= t_max; ++t) {
        if (t <= naive_max_degree) {
            const double r = measure(eval_standard_naive, t);
            rows.push_back({{"evaluator", "naive"}, {"t", t}, {"size", size}, {"field", opt.ring.to_string()},
                            {"evals_per_second", r}});
            if (t == t_max) naive_top = r;
        }
        const double r = measure(eval_standard_dp, t);
        rows.push_back({{"evaluator", "dp"}, {"t", t}, {"size", size}, {"field", opt.ring.to_string()},
                        {"evals_per_second", r}});
        if (t == t_max) dp_top = r;
    }
    run.add("throughput", true, json{{"rows", rows}}, false);
    if (naive_top && dp_top) {
        const double ratio = *dp_top / *naive_top;
        run.add("dp speedup over naive at t=" + std::to_string(t_max), ratio >= 100.0,
                json{{"ratio", ratio}, {"target", 100.0}}, false);
    }
    return run.finish();
}

CommandResult run_command(const std::string& name, const CommandOptions& opt) {
    if (name == "verify-al") return cmd_verify_al(opt);
    if (name == "classify") return cmd_classify(opt);
    if (name == "min-degree") return cmd_min_degree(opt);
    if (name == "identity-space") return cmd_identity_space(opt);
    if (name == "lemma-suite") return cmd_lemma_suite(opt);
    if (name == "bench") return cmd_bench(opt);
    throw Error(Errc::invalid_argument, "unknown command '" + name + "'");
}

}  // namespace matpi
