#include "matpi/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace matpi {

namespace {

using json = nlohmann::json;

class SpecReader {
public:
    explicit SpecReader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& path, const std::string& what) const {
        throw Error(Errc::parse_error, origin_ + ": " + (path.empty() ? "" : path + ": ") + what);
    }

    const json& field(const json& obj, const std::string& path, const char* key) const {
        if (!obj.is_object()) fail(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(join(path, key), "missing required field");
        return *it;
    }

    std::uint64_t integer(const json& v, const std::string& path, std::uint64_t min) const {
        if (v.is_number_float()) fail(path, "expected an integer, got a floating-point number");
        if (v.is_number_integer() && v.get<std::int64_t>() < 0) fail(path, "must be >= " + std::to_string(min));
        if (!v.is_number_unsigned()) fail(path, "expected an integer");
        const auto x = v.get<std::uint64_t>();
        if (x < min) fail(path, "must be >= " + std::to_string(min));
        return x;
    }

    std::vector<std::size_t> size_list(const json& v, const std::string& path) const {
        if (!v.is_array() || v.empty()) fail(path, "expected a nonempty list of positive integers");
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < v.size(); ++k) out.push_back(integer(v[k], index(path, k), 1));
        return out;
    }

    static std::string join(const std::string& path, const std::string& key) {
        return path.empty() ? key : path + "." + key;
    }
    static std::string index(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

private:
    std::string origin_;
};

RingSpec read_ring(const SpecReader& rd, const json& j) {
    const std::string path = "ring";
    if (j.is_string()) {
        try {
            return RingSpec::parse(j.get<std::string>());
        } catch (const Error& e) {
            rd.fail(path, e.what());
        }
    }
    const auto& kind_j = rd.field(j, path, "kind");
    if (!kind_j.is_string()) rd.fail("ring.kind", "expected a string");
    const auto kind = kind_j.get<std::string>();
    if (kind == "gf" || kind == "prime_field") {
        const auto p = rd.integer(rd.field(j, path, "p"), "ring.p", 2);
        if (p > RingSpec::max_modulus) rd.fail("ring.p", std::to_string(p) + " exceeds the supported modulus range");
        if (!is_prime(p)) rd.fail("ring.p", std::to_string(p) + " is not prime");
        return RingSpec::prime_field(p);
    }
    if (kind == "q" || kind == "rationals") return RingSpec::rationals();
    if (kind == "zmod" || kind == "integers_mod") {
        const auto m = rd.integer(rd.field(j, path, "m"), "ring.m", 2);
        if (m > RingSpec::max_modulus) rd.fail("ring.m", std::to_string(m) + " exceeds the supported modulus range");
        return RingSpec::integers_mod(m);
    }
    rd.fail("ring.kind", "unknown ring kind '" + kind + "' (expected gf, q or zmod)");
}

Scalar read_scalar(const SpecReader& rd, const json& v, const std::string& path, RingSpec ring) {
    std::string text;
    if (v.is_string()) {
        text = v.get<std::string>();
    } else if (v.is_number_integer()) {
        text = v.dump();
    } else if (v.is_number_float()) {
        rd.fail(path, "floating-point entries are not allowed; write the value as a string such as \"1/2\"");
    } else {
        rd.fail(path, "expected a scalar string");
    }
    if (text.find('/') != std::string::npos && !ring.is_rational())
        rd.fail(path, "fraction '" + text + "' is not allowed over " + ring.to_string());
    try {
        return Scalar::parse(ring, text);
    } catch (const Error& e) {
        rd.fail(path, e.what());
    }
}

Matrix read_matrix(const SpecReader& rd, const json& v, const std::string& path, RingSpec ring, std::size_t n) {
    if (!v.is_array() || v.empty()) rd.fail(path, "expected a matrix as a nonempty list of rows");
    const std::size_t rows = v.size();
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!v[r].is_array()) rd.fail(SpecReader::index(path, r), "expected a row list");
        if (r == 0) cols = v[r].size();
        if (v[r].size() != cols)
            rd.fail(SpecReader::index(path, r), "row has " + std::to_string(v[r].size()) + " entries, expected " +
                                                    std::to_string(cols));
    }
    if (rows != cols)
        rd.fail(path, "matrix is not square (" + std::to_string(rows) + "x" + std::to_string(cols) + ")");
    if (rows != n)
        rd.fail(path, "matrix is " + std::to_string(rows) + "x" + std::to_string(rows) + " but n = " +
                          std::to_string(n));
    std::vector<Scalar> entries;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            entries.push_back(read_scalar(rd, v[r][c], SpecReader::index(SpecReader::index(path, r), c), ring));
    return Matrix::from_scalars(ring, rows, cols, entries);
}

NamedConstruction read_construction(const SpecReader& rd, const json& j) {
    const std::string path = "source.construction";
    const auto& kind_j = rd.field(j, path, "kind");
    if (!kind_j.is_string()) rd.fail(path + ".kind", "expected a string");
    const auto kind = kind_j.get<std::string>();
    auto num = [&](const char* key, std::uint64_t min = 1) {
        return rd.integer(rd.field(j, path, key), path + "." + key, min);
    };
    auto shape = [&] { return BlockShape(rd.size_list(rd.field(j, path, "shape"), path + ".shape")); };
    if (kind == "full_block") return {NamedConstruction::FullBlock{shape()}};
    if (kind == "block_diagonal") return {NamedConstruction::BlockDiagonal{shape()}};
    if (kind == "staircase") return {NamedConstruction::Staircase{num("n")}};
    if (kind == "upper_triangular") return {NamedConstruction::UpperTriangular{num("n")}};
    if (kind == "repetition") return {NamedConstruction::Repetition{num("l"), num("m")}};
    if (kind == "radical_t") return {NamedConstruction::RadicalT{num("l"), num("m")}};
    if (kind == "diagonal_embedding") return {NamedConstruction::DiagonalEmbedding{num("k"), num("copies")}};
    if (kind == "remark") return {NamedConstruction::Remark{num("n", 2), num("modulus", 2), num("generator")}};
    rd.fail(path + ".kind", "unknown construction '" + kind +
                                "' (expected full_block, block_diagonal, staircase, upper_triangular, repetition, "
                                "radical_t, diagonal_embedding or remark)");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

bool AlgebraSpec::is_remark() const {
    const auto* nc = std::get_if<NamedConstruction>(&source);
    return nc && std::holds_alternative<NamedConstruction::Remark>(nc->kind);
}

SubalgebraBasis AlgebraSpec::build() const {
    if (const auto* nc = std::get_if<NamedConstruction>(&source)) {
        auto a = nc->build(ring);
        if (include_identity && !a.is_unital()) a = close_generators({ring, n, a.basis(), true});
        return a;
    }
    return close_generators(std::get<GeneratorSet>(source));
}

RemarkAlgebra AlgebraSpec::build_remark() const {
    const auto& r = std::get<NamedConstruction::Remark>(std::get<NamedConstruction>(source).kind);
    return remark_algebra(r.n, r.modulus, r.generator);
}

std::string AlgebraSpec::descriptor() const {
    if (const auto* nc = std::get_if<NamedConstruction>(&source)) return nc->name() + " over " + ring.to_string();
    const auto& g = std::get<GeneratorSet>(source);
    return "closure of " + std::to_string(g.gens.size()) + " generator(s)" +
           (g.include_identity ? " and I" : "") + " in M_" + std::to_string(n) + " over " + ring.to_string();
}

AlgebraSpec parse_spec(std::string_view text, std::string_view origin) {
    SpecReader rd{std::string(origin)};
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw Error(Errc::parse_error, std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                           ": invalid JSON: " + e.what());
    }
    if (!j.is_object()) rd.fail("", "top level must be an object");
    static const std::vector<std::string> known{"ring", "n", "source", "include_identity", "shape", "comment"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) rd.fail(key, "unknown field");

    AlgebraSpec spec;
    spec.ring = read_ring(rd, rd.field(j, "", "ring"));
    spec.n = rd.integer(rd.field(j, "", "n"), "n", 1);
    if (j.contains("include_identity")) {
        if (!j["include_identity"].is_boolean()) rd.fail("include_identity", "expected true or false");
        spec.include_identity = j["include_identity"].get<bool>();
    }

    const auto& src = rd.field(j, "", "source");
    const bool has_c = src.is_object() && src.contains("construction");
    const bool has_g = src.is_object() && src.contains("generators");
    if (has_c == has_g) rd.fail("source", "expected exactly one of 'construction' or 'generators'");
    if (has_c) {
        NamedConstruction nc = read_construction(rd, src["construction"]);
        try {
            if (nc.ambient_size() != spec.n)
                rd.fail("n", std::to_string(spec.n) + " does not match the construction's size " +
                                 std::to_string(nc.ambient_size()));
        } catch (const Error& e) {
            if (e.code() == Errc::parse_error) throw;
            rd.fail("source.construction", e.what());
        }
        const bool remark = std::holds_alternative<NamedConstruction::Remark>(nc.kind);
        if (remark) {
            const auto& r = std::get<NamedConstruction::Remark>(nc.kind);
            if (spec.ring != RingSpec::integers_mod(r.modulus))
                rd.fail("ring", "the remark construction needs ring zmod with m = " + std::to_string(r.modulus));
            try {
                (void)remark_algebra(r.n, r.modulus, r.generator);
            } catch (const Error& e) {
                rd.fail("source.construction", e.what());
            }
        } else if (!spec.ring.is_field()) {
            rd.fail("ring", "constructions other than 'remark' need a field (gf or q)");
        }
        spec.source = std::move(nc);
    } else {
        if (!spec.ring.is_field()) rd.fail("ring", "generator closure needs a field (gf or q)");
        const auto& gens = src["generators"];
        if (!gens.is_array()) rd.fail("source.generators", "expected a list of matrices");
        if (gens.empty() && !spec.include_identity)
            rd.fail("source.generators", "empty generator list without include_identity");
        GeneratorSet g{spec.ring, spec.n, {}, spec.include_identity};
        for (std::size_t k = 0; k < gens.size(); ++k)
            g.gens.push_back(read_matrix(rd, gens[k], SpecReader::index("source.generators", k), spec.ring, spec.n));
        spec.source = std::move(g);
    }

    if (j.contains("shape")) {
        BlockShape shape(rd.size_list(j["shape"], "shape"));
        if (shape.n() != spec.n)
            rd.fail("shape", "parts sum to " + std::to_string(shape.n()) + " but n = " + std::to_string(spec.n));
        spec.shape = std::move(shape);
    }
    json canon = j;
    canon.erase("comment");
    spec.canonical = canon.dump();
    return spec;
}

AlgebraSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::parse_error, path.string() + ": cannot open spec file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path.string());
}

}  // namespace matpi
