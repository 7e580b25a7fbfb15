#include "matpi/ring.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "matpi/detail/field_ops.hpp"

namespace matpi {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::ring_mismatch: return "ring-mismatch";
        case Errc::unsupported_ring: return "unsupported-ring";
        case Errc::characteristic_too_small: return "characteristic-too-small";
        case Errc::index_out_of_range: return "index-out-of-range";
        case Errc::degree_too_large: return "degree-too-large";
        case Errc::not_block_triangular: return "not-block-triangular";
        case Errc::not_simple_blocks: return "not-simple-blocks";
        case Errc::parse_error: return "parse-error";
        case Errc::contract_violation: return "contract-violation";
    }
    return "unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
    if (p > max_modulus)
        throw Error(Errc::invalid_argument, "prime " + std::to_string(p) + " exceeds the 32-bit modulus limit");
    if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
    return RingSpec(Kind::prime_field, p);
}

RingSpec RingSpec::rationals() { return RingSpec(Kind::rationals, 0); }

RingSpec RingSpec::integers_mod(std::uint64_t m) {
    if (m < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
    if (m > max_modulus)
        throw Error(Errc::invalid_argument, "modulus " + std::to_string(m) + " exceeds the 32-bit limit");
    return RingSpec(Kind::integers_mod, m);
}

namespace {

std::string lowercase(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(c)));
    return out;
}

std::uint64_t parse_u64(std::string_view s, std::string_view context) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw Error(Errc::parse_error, "cannot parse integer '" + std::string(s) + "' in " + std::string(context));
    return v;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
    const auto s = lowercase(text);
    if (s == "q" || s == "rational" || s == "rationals") return rationals();
    auto strip = [&](std::string_view prefix, std::string_view suffix) -> std::string_view {
        std::string_view v(s);
        if (!v.starts_with(prefix) || !v.ends_with(suffix)) return {};
        v.remove_prefix(prefix.size());
        v.remove_suffix(suffix.size());
        return v;
    };
    for (auto [prefix, suffix] : {std::pair{"gf:", ""}, {"gf(", ")"}, {"gf", ""}}) {
        if (auto v = strip(prefix, suffix); !v.empty()) return prime_field(parse_u64(v, "ring"));
    }
    for (auto [prefix, suffix] : {std::pair{"zmod:", ""}, {"z/", ""}, {"zmod", ""}}) {
        if (auto v = strip(prefix, suffix); !v.empty()) return integers_mod(parse_u64(v, "ring"));
    }
    throw Error(Errc::parse_error, "unknown ring '" + std::string(text) + "' (expected gf:<p>, q, or zmod:<m>)");
}

std::string RingSpec::to_string() const {
    switch (kind_) {
        case Kind::prime_field: return "GF(" + std::to_string(modulus_) + ")";
        case Kind::rationals: return "Q";
        case Kind::integers_mod: return "Z/" + std::to_string(modulus_);
    }
    return "?";
}

Scalar::Scalar(RingSpec ring, std::int64_t value) : ring_(ring) {
    if (ring.is_rational())
        value_ = mpq_class(static_cast<long>(value));
    else
        value_ = detail::ModOps{ring.modulus()}.from_int(value);
}

Scalar::Scalar(RingSpec ring, const mpq_class& value) : ring_(ring) {
    if (ring.is_rational()) {
        mpq_class v(value);
        v.canonicalize();
        value_ = std::move(v);
        return;
    }
    // a/b maps to a * b^{-1}; only invertible denominators are accepted
    detail::ModOps ops{ring.modulus()};
    mpz_class m(static_cast<unsigned long>(ring.modulus()));
    mpz_class num = value.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = value.get_den() % m;
    auto n = static_cast<std::uint64_t>(num.get_ui());
    auto d = static_cast<std::uint64_t>(den.get_ui());
    value_ = ops.mul(n, ops.inv(d));
}

Scalar Scalar::parse(RingSpec ring, std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) tokens.push_back(tok);

    const std::string shown(text);
    std::string body;
    if (tokens.size() == 1) {
        body = tokens[0];
    } else if (tokens.size() == 3 && tokens[1] == "mod") {
        if (ring.is_rational())
            throw Error(Errc::parse_error, "residue '" + shown + "' given for a rational ring");
        if (parse_u64(tokens[2], "scalar modulus") != ring.modulus())
            throw Error(Errc::parse_error, "residue '" + shown + "' does not match ring " + ring.to_string());
        body = tokens[0];
    } else {
        throw Error(Errc::parse_error, "malformed scalar '" + shown + "'");
    }

    const auto slash = body.find('/');
    if (slash != std::string::npos && !ring.is_rational())
        throw Error(Errc::parse_error, "fraction '" + shown + "' is not allowed over " + ring.to_string());
    if (body.front() == '+') body.erase(0, 1);
    if (body.empty() || body.find_first_not_of("0123456789-/") != std::string::npos)
        throw Error(Errc::parse_error, "malformed scalar '" + shown + "'");
    if (slash != std::string::npos && body.find_first_not_of('0', body.find('/') + 1) == std::string::npos)
        throw Error(Errc::parse_error, "zero denominator in '" + shown + "'");

    mpq_class q;
    if (q.set_str(body, 10) != 0) throw Error(Errc::parse_error, "malformed scalar '" + shown + "'");
    q.canonicalize();
    return Scalar(ring, q);
}

bool Scalar::is_zero() const {
    if (ring_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

std::uint64_t Scalar::residue() const {
    if (ring_.is_rational()) throw Error(Errc::unsupported_ring, "residue() on a rational scalar");
    return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
    if (!ring_.is_rational()) throw Error(Errc::unsupported_ring, "rational() on a modular scalar");
    return std::get<mpq_class>(value_);
}

void Scalar::require_same_ring(const Scalar& rhs) const {
    if (!(ring_ == rhs.ring_))
        throw Error(Errc::ring_mismatch, "scalars over " + ring_.to_string() + " and " + rhs.ring_.to_string());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_ring(rhs);
    if (ring_.is_rational()) return Scalar(ring_, rational() + rhs.rational());
    Scalar out = *this;
    out.value_ = detail::ModOps{ring_.modulus()}.add(residue(), rhs.residue());
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_ring(rhs);
    if (ring_.is_rational()) return Scalar(ring_, rational() - rhs.rational());
    Scalar out = *this;
    out.value_ = detail::ModOps{ring_.modulus()}.sub(residue(), rhs.residue());
    return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_ring(rhs);
    if (ring_.is_rational()) return Scalar(ring_, rational() * rhs.rational());
    Scalar out = *this;
    out.value_ = detail::ModOps{ring_.modulus()}.mul(residue(), rhs.residue());
    return out;
}

Scalar Scalar::operator-() const { return zero(ring_) - *this; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(Errc::invalid_argument, "inverse of zero");
    if (ring_.is_rational()) return Scalar(ring_, mpq_class(1) / rational());
    Scalar out = *this;
    out.value_ = detail::ModOps{ring_.modulus()}.inv(residue());
    return out;
}

bool Scalar::operator==(const Scalar& rhs) const { return ring_ == rhs.ring_ && value_ == rhs.value_; }

std::string Scalar::to_string() const {
    if (ring_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

}  // namespace matpi
