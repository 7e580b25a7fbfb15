#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "matpi/report.hpp"
#include "matpi/spec_file.hpp"

namespace matpi {

/// Process exit codes shared by the CLI and the Python bindings.
enum ExitCode : int { exit_consistent = 0, exit_usage = 1, exit_claim_failed = 2 };

struct CommandOptions {
    enum class Mode { automatic, exhaustive, randomized };

    RingSpec ring = RingSpec::prime_field(101);
    std::optional<std::size_t> n;
    Mode mode = Mode::automatic;
    /// Per-command default when unset.
    std::optional<std::size_t> trials;
    std::uint64_t seed = 42;
    std::size_t threads = 1;
    std::optional<std::filesystem::path> spec;
    /// Degree for identity-space, upper bound for min-degree.
    std::optional<std::size_t> degree;
    bool timing = false;
};

struct CommandResult {
    RunReport report;
    int exit_code = exit_consistent;
};

/// s_2n on M_n is an identity, s_(2n-2) and s_(2n-1) are not, and the
/// staircase evaluates to e_1n. Exhaustive mode is limited to n <= 4.
CommandResult cmd_verify_al(const CommandOptions& opt);

/// Structural classification of a spec (which must carry a shape),
/// cross-checked against s_(2n-2).
CommandResult cmd_classify(const CommandOptions& opt);

CommandResult cmd_min_degree(const CommandOptions& opt);

/// Multilinear identities of degree t of a spec, or of M_n when no spec is
/// given.
CommandResult cmd_identity_space(const CommandOptions& opt);

/// Seeded suite over the block lemmas, the repetition algebras and the
/// Z/4 witnesses.
CommandResult cmd_lemma_suite(const CommandOptions& opt);

/// Throughput of the naive and subset-DP evaluators on random tuples.
CommandResult cmd_bench(const CommandOptions& opt);

/// Dispatches by subcommand name; throws invalid_argument for unknown names.
CommandResult run_command(const std::string& name, const CommandOptions& opt);

}  // namespace matpi
