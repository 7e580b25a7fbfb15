#pragma once

// Flat-buffer kernels for square matrices, used by the polynomial
// evaluators where allocation-free inner loops matter.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "matpi/detail/field_ops.hpp"

namespace matpi::detail {

/// True if n products of reduced residues can be summed in 64 bits.
inline bool fits_word_accumulator(std::uint64_t m, std::size_t n) {
    const auto top = m - 1;
    return top == 0 || top <= UINT64_MAX / top / n;
}

template <class Acc>
inline std::uint64_t dot_mod(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t m,
                             std::size_t r, std::size_t c) {
    Acc acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += static_cast<Acc>(a[r * n + k]) * b[k * n + c];
    return static_cast<std::uint64_t>(acc % m);
}

/// out = a * b for n x n row-major buffers; out must not alias a or b.
inline void mul_square(const ModOps& ops, const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                       std::size_t n) {
    const bool narrow = fits_word_accumulator(ops.m, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r * n + c] = narrow ? dot_mod<std::uint64_t>(a, b, n, ops.m, r, c)
                                    : dot_mod<unsigned __int128>(a, b, n, ops.m, r, c);
}

inline void mul_square(const RatOps&, const mpq_class* a, const mpq_class* b, mpq_class* out, std::size_t n) {
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            mpq_class acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += a[r * n + k] * b[k * n + c];
            out[r * n + c] = std::move(acc);
        }
    }
}

/// acc += sign * (a * b); sign is +1 or -1.
inline void mul_accumulate(const ModOps& ops, const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* acc,
                           std::size_t n, int sign) {
    const bool narrow = fits_word_accumulator(ops.m, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const auto v = narrow ? dot_mod<std::uint64_t>(a, b, n, ops.m, r, c)
                                  : dot_mod<unsigned __int128>(a, b, n, ops.m, r, c);
            auto& dst = acc[r * n + c];
            dst = sign > 0 ? ops.add(dst, v) : ops.sub(dst, v);
        }
    }
}

inline void mul_accumulate(const RatOps&, const mpq_class* a, const mpq_class* b, mpq_class* acc, std::size_t n,
                           int sign) {
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            mpq_class s = 0;
            for (std::size_t k = 0; k < n; ++k) s += a[r * n + k] * b[k * n + c];
            if (sign > 0)
                acc[r * n + c] += s;
            else
                acc[r * n + c] -= s;
        }
    }
}

}  // namespace matpi::detail
