#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace matpi {

/// A composition (l_1, ..., l_t) of n fixing block coordinates.
class BlockShape {
public:
    explicit BlockShape(std::vector<std::size_t> parts);

    /// The shape (1, 1, ..., 1) of length n.
    static BlockShape ones(std::size_t n);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t blocks() const noexcept { return parts_.size(); }
    std::size_t n() const noexcept { return n_; }
    /// Size of block i (1-based).
    std::size_t part(std::size_t i) const;
    /// 0-based first row/column of block i (1-based).
    std::size_t offset(std::size_t i) const;
    /// 1-based block index holding 0-based row r.
    std::size_t block_of(std::size_t r) const;

    std::string to_string() const;
    bool operator==(const BlockShape&) const = default;

private:
    std::vector<std::size_t> parts_;
    std::size_t n_;
};

/// All compositions of n, in lexicographic order.
std::vector<BlockShape> compositions(std::size_t n);

}  // namespace matpi
