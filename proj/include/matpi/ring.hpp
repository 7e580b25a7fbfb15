#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "matpi/error.hpp"

namespace matpi {

/// Coefficient ring tag: GF(p), the rationals, or Z/m.
///
/// Moduli are kept below 2^32 so that a product of two residues fits in a
/// machine word; this is the fast path used by every exhaustive sweep.
class RingSpec {
public:
    enum class Kind { prime_field, rationals, integers_mod };

    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 32) - 1;

    static RingSpec prime_field(std::uint64_t p);
    static RingSpec rationals();
    static RingSpec integers_mod(std::uint64_t m);

    /// Accepts "gf:101", "GF(101)", "q", "rational", "rationals", "zmod:4", "Z/4".
    static RingSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return kind_ == Kind::rationals ? 0 : modulus_; }
    bool is_field() const noexcept { return kind_ != Kind::integers_mod; }
    bool is_rational() const noexcept { return kind_ == Kind::rationals; }

    std::string to_string() const;

    bool operator==(const RingSpec&) const = default;

private:
    RingSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;  // 0 for the rationals
};

bool is_prime(std::uint64_t n);

/// An element of a RingSpec in canonical form: residues in [0, m), rationals
/// reduced with positive denominator. Equality is representation equality.
class Scalar {
public:
    Scalar(RingSpec ring, std::int64_t value);
    Scalar(RingSpec ring, const mpq_class& value);

    static Scalar zero(RingSpec ring) { return Scalar(ring, std::int64_t{0}); }
    static Scalar one(RingSpec ring) { return Scalar(ring, std::int64_t{1}); }

    /// Parses "3", "-2/7" or "2 mod 4". Fractions are only accepted over the
    /// rationals; the "mod" suffix must agree with the ring's modulus.
    static Scalar parse(RingSpec ring, std::string_view text);

    const RingSpec& ring() const noexcept { return ring_; }
    bool is_zero() const;
    std::uint64_t residue() const;          // modular rings only
    const mpq_class& rational() const;      // rationals only

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;

    std::string to_string() const;

private:
    void require_same_ring(const Scalar& rhs) const;

    RingSpec ring_;
    std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace matpi
