#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "matpi/commands.hpp"

int main(int argc, char** argv) {
    using matpi::CommandOptions;

    CLI::App app{"Exact polynomial-identity checks for matrix subalgebras", "matpi"};
    app.set_version_flag("--version", matpi::version_string);
    app.require_subcommand(1, 1);

    CommandOptions opt;
    std::string ring = "gf:101";
    std::string mode = "auto";
    std::string out = "text";
    std::size_t n = 0, degree = 0, trials = 0;
    std::string spec;

    const std::map<std::string, std::string> subcommands{
        {"verify-al", "s_2n vanishes on M_n while s_2n-2, s_2n-1 do not; staircase value"},
        {"classify", "structural classification of a spec, cross-checked against s_2n-2"},
        {"min-degree", "smallest t with s_t an identity"},
        {"identity-space", "all multilinear identities of a given degree"},
        {"lemma-suite", "seeded checks of the block lemmas and the Z/4 witnesses"},
        {"bench", "naive vs subset-DP evaluator throughput"},
    };
    for (const auto& [name, help] : subcommands) app.add_subcommand(name, help)->fallthrough();

    app.add_option("--ring", ring, "gf:<p>, q, or zmod:<m>")->capture_default_str();
    app.add_option("--n", n, "ambient matrix size (bench: matrix size)")->check(CLI::PositiveNumber);
    app.add_option("--mode", mode, "auto, exhaustive or randomized")
        ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}))
        ->capture_default_str();
    app.add_option("--trials", trials, "random trials (per-command default when omitted)")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for every random choice")->capture_default_str();
    app.add_option("--spec", spec, "JSON algebra spec file")->check(CLI::ExistingFile);
    app.add_option("--degree", degree, "degree t (identity-space) or upper bound (min-degree, bench)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out, "text or structured")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads for exhaustive sweeps")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}))
        ->capture_default_str();
    app.add_flag("--timing", opt.timing, "include wall-clock times (reports are then not byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return matpi::exit_usage;
    }

    try {
        opt.ring = matpi::RingSpec::parse(ring);
        if (n) opt.n = n;
        if (degree) opt.degree = degree;
        if (trials) opt.trials = trials;
        if (!spec.empty()) opt.spec = spec;
        opt.mode = mode == "exhaustive"   ? CommandOptions::Mode::exhaustive
                   : mode == "randomized" ? CommandOptions::Mode::randomized
                                          : CommandOptions::Mode::automatic;

        const auto result = matpi::run_command(app.get_subcommands().front()->get_name(), opt);
        std::cout << (out == "structured" ? result.report.structured() : result.report.text());
        return result.exit_code;
    } catch (const matpi::Error& e) {
        std::cerr << "matpi: " << matpi::errc_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == matpi::Errc::contract_violation ? matpi::exit_claim_failed : matpi::exit_usage;
    }
}
