#pragma once

// Element-level arithmetic policies shared by the dense kernels. A kernel is
// written once against the policy interface and instantiated for residues
// and for GMP rationals.

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "matpi/error.hpp"
#include "matpi/ring.hpp"

namespace matpi::detail {

struct ModOps {
    using value_type = std::uint64_t;

    std::uint64_t m;

    value_type zero() const { return 0; }
    value_type one() const { return 1 % m; }
    value_type from_int(std::int64_t v) const {
        const auto mm = static_cast<std::int64_t>(m);
        auto r = v % mm;
        if (r < 0) r += mm;
        return static_cast<value_type>(r);
    }
    value_type add(value_type a, value_type b) const {
        auto s = a + b;
        return s >= m ? s - m : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + m - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : m - a; }
    value_type mul(value_type a, value_type b) const { return (a * b) % m; }
    bool is_zero(value_type a) const { return a == 0; }

    value_type inv(value_type a) const {
        // extended Euclid on signed 64-bit; m < 2^32 keeps this in range
        std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a);
        std::int64_t s0 = 0, s1 = 1;
        while (r1 != 0) {
            const auto q = r0 / r1;
            r0 = std::exchange(r1, r0 - q * r1);
            s0 = std::exchange(s1, s0 - q * s1);
        }
        if (r0 != 1) throw Error(Errc::unsupported_ring, "element is not invertible modulo " + std::to_string(m));
        return from_int(s0);
    }
};

struct RatOps {
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw Error(Errc::invalid_argument, "division by zero");
        return 1 / a;
    }
};

/// Calls fn(ops) with the arithmetic policy matching the ring.
template <class Fn>
decltype(auto) with_ops(const RingSpec& ring, Fn&& fn) {
    if (ring.is_rational()) return std::forward<Fn>(fn)(RatOps{});
    return std::forward<Fn>(fn)(ModOps{ring.modulus()});
}

}  // namespace matpi::detail
