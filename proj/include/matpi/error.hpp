#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matpi {

enum class Errc {
    invalid_argument,
    dimension_mismatch,
    ring_mismatch,
    unsupported_ring,
    characteristic_too_small,
    index_out_of_range,
    degree_too_large,
    not_block_triangular,
    not_simple_blocks,
    parse_error,
    contract_violation,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI and the Python bindings can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace matpi
