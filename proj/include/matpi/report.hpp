#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matpi/block_structure.hpp"
#include "matpi/lemma_checks.hpp"
#include "matpi/pi_testing.hpp"

namespace matpi {

using json = nlohmann::ordered_json;

inline constexpr const char* version_string = "0.1.0";

/// One verified claim. `passed` means the outcome agrees with the expected
/// mathematics; informative entries never affect the exit status.
struct CheckResult {
    std::string name;
    bool passed = true;
    bool gating = true;
    json detail = json::object();

    bool operator==(const CheckResult&) const = default;
};

struct RunReport {
    std::string command;
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    std::optional<double> wall_seconds;
    std::string version = version_string;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    json to_json() const;
    static RunReport from_json(const json& j);
    /// Pretty-printed JSON; stable for identical inputs when timing is off.
    std::string structured() const;
    std::string text() const;

    bool operator==(const RunReport&) const = default;
};

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

json to_json(const Matrix& m);
json to_json(const std::vector<Matrix>& ms);
json to_json(const IdentityReport& r, bool timing = false);
json to_json(const ClassificationVerdict& v);
json to_json(const IdentitySpace& s);
json to_json(const SweepResult& s);
json to_json(const LemmaBlocksReport& r);

}  // namespace matpi
