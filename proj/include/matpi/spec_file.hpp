#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "matpi/algebra.hpp"
#include "matpi/block_shape.hpp"
#include "matpi/constructions.hpp"

namespace matpi {

/// An algebra described by a JSON spec file:
///
///   {
///     "ring": {"kind": "gf", "p": 101},
///     "n": 3,
///     "source": {"construction": {"kind": "full_block", "shape": [1, 2]}},
///     "include_identity": false,
///     "shape": [1, 2]
///   }
///
/// `source` may instead hold "generators": a list of n x n matrices whose
/// entries are strings such as "3", "-2/7" or "2 mod 4".
struct AlgebraSpec {
    RingSpec ring = RingSpec::rationals();
    std::size_t n = 0;
    std::variant<GeneratorSet, NamedConstruction> source = GeneratorSet{RingSpec::rationals(), 0, {}, false};
    bool include_identity = false;
    std::optional<BlockShape> shape;
    /// Canonical re-serialization (sorted keys, no whitespace); hashed into
    /// report digests.
    std::string canonical;

    bool is_remark() const;
    /// Builds the subalgebra; the Z/m remark construction is rejected.
    SubalgebraBasis build() const;
    RemarkAlgebra build_remark() const;
    std::string descriptor() const;
};

/// Parses spec text. Errors carry Errc::parse_error and name either the
/// offending field path (e.g. "source.generators[1][0][2]") or, for JSON
/// syntax errors, the line and column; `origin` prefixes every message.
AlgebraSpec parse_spec(std::string_view text, std::string_view origin = "<spec>");
AlgebraSpec load_spec(const std::filesystem::path& path);

}  // namespace matpi
