#include "matpi/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace matpi {

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(Errc::contract_violation, "SHA-256 computation failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

json to_json(const Matrix& m) { return json(m.to_string_rows()); }

json to_json(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

json to_json(const IdentityReport& r, bool timing) {
    json j;
    j["algebra"] = r.algebra;
    j["degree"] = r.degree;
    if (r.mode.kind == TestMode::Kind::exhaustive) {
        j["mode"] = {{"kind", "exhaustive"}};
    } else {
        j["mode"] = {{"kind", "randomized"}, {"trials", r.mode.trials}, {"seed", r.mode.seed}};
    }
    j["identity"] = r.identity;
    j["probabilistic"] = r.probabilistic;
    j["tuples_checked"] = r.tuples_checked;
    if (r.witness) {
        json w;
        if (!r.witness->indices.empty()) w["indices"] = r.witness->indices;
        w["tuple"] = to_json(r.witness->tuple);
        w["value"] = to_json(r.witness->value);
        j["witness"] = std::move(w);
    }
    j["justification"] = r.justification;
    if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

json to_json(const ClassificationVerdict& v) {
    json j;
    j["kind"] = to_string(v.kind);
    j["shape"] = v.shape.parts();
    if (v.kind == ClassificationVerdict::Kind::satisfies_low_degree) {
        j["reason"] = to_string(v.reason);
        j["i"] = v.i;
        if (v.reason == ClassificationVerdict::Reason::repetition) j["j"] = v.j;
    }
    j["detail"] = v.detail;
    auto witness = [](const StaircaseWitness& w) {
        return json{{"degree", w.degree}, {"tuple", to_json(w.tuple)}, {"value", to_json(w.value)}};
    };
    if (v.staircase_witness) j["staircase_witness"] = witness(*v.staircase_witness);
    if (v.low_degree_witness) j["low_degree_witness"] = witness(*v.low_degree_witness);
    j["summary"] = v.summary();
    return j;
}

json to_json(const IdentitySpace& s) {
    json basis = json::array();
    for (const auto& v : s.basis) basis.push_back(to_json(v)[0]);
    return {{"degree", s.degree}, {"dimension", s.dimension()}, {"tuples_scanned", s.tuples_scanned},
            {"basis", std::move(basis)}};
}

json to_json(const SweepResult& s) {
    json j{{"name", s.name}, {"trials", s.trials}, {"failures", s.failures}};
    if (s.first_failure) j["first_failure"] = to_json(*s.first_failure);
    return j;
}

json to_json(const LemmaBlocksReport& r) {
    json j{{"valid_instance", r.valid_instance}};
    if (!r.valid_instance) j["invalid_reason"] = r.invalid_reason;
    j["l"] = r.l;
    j["m"] = r.m;
    j["q"] = r.q;
    j["r"] = r.r;
    j["trials"] = r.trials;
    j["violations"] = r.violations;
    if (r.first_violation) j["first_violation"] = to_json(*r.first_violation);
    return j;
}

bool RunReport::all_passed() const {
    for (const auto& c : checks)
        if (c.gating && !c.passed) return false;
    return true;
}

json RunReport::to_json() const {
    json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["seed"] = seed ? json(*seed) : json(nullptr);
    if (wall_seconds) j["wall_seconds"] = *wall_seconds;
    j["version"] = version;
    json cs = json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name}, {"passed", c.passed}, {"gating", c.gating}, {"detail", c.detail}});
    j["checks"] = std::move(cs);
    j["consistent"] = all_passed();
    return j;
}

RunReport RunReport::from_json(const json& j) {
    RunReport r;
    try {
        r.command = j.at("command").get<std::string>();
        r.input_digest = j.at("input_digest").get<std::string>();
        if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("wall_seconds")) r.wall_seconds = j.at("wall_seconds").get<double>();
        r.version = j.at("version").get<std::string>();
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                                c.at("gating").get<bool>(), c.at("detail")});
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("malformed report: ") + e.what());
    }
    return r;
}

std::string RunReport::structured() const { return to_json().dump(2) + "\n"; }

namespace {

bool is_record_list(const json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v)
        if (!row.is_object() || row.size() != v.front().size()) return false;
    return true;
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(1) << v.get<double>();
        return s.str();
    }
    return v.dump();
}

void render_table(std::ostringstream& out, const json& rows, const std::string& pad) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& k : keys) width.push_back(k.size());
    for (const auto& row : rows)
        for (std::size_t c = 0; c < keys.size(); ++c) width[c] = std::max(width[c], cell(row.value(keys[c], json())).size());
    auto line = [&](auto get) {
        out << pad;
        for (std::size_t c = 0; c < keys.size(); ++c) out << std::setw(static_cast<int>(width[c]) + 2) << get(c);
        out << "\n";
    };
    line([&](std::size_t c) { return keys[c]; });
    for (const auto& row : rows) line([&](std::size_t c) { return cell(row.value(keys[c], json())); });
}

void render_detail(std::ostringstream& out, const json& d, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : d.items()) {
        if (is_record_list(value) && value.front().size() > 1 && !value.front().contains("tuple")) {
            out << pad << key << ":\n";
            render_table(out, value, pad);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << pad << key << ":\n";
            for (std::size_t k = 0; k < value.size(); ++k) {
                out << pad << "  [" << k << "]\n";
                render_detail(out, value[k], indent + 4);
            }
        } else if (value.is_object()) {
            out << pad << key << ":\n";
            render_detail(out, value, indent + 2);
        } else if (value.is_string()) {
            out << pad << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << pad << key << ": " << value.dump() << "\n";
        }
    }
}

}  // namespace

std::string RunReport::text() const {
    std::ostringstream out;
    out << "matpi " << version << "  " << command << "\n";
    out << "input sha256 " << input_digest << "\n";
    if (seed) out << "seed " << *seed << "\n";
    for (const auto& c : checks) {
        out << (!c.gating ? "[info] " : c.passed ? "[ok]   " : "[FAIL] ") << c.name << "\n";
        render_detail(out, c.detail, 7);
    }
    if (wall_seconds) out << "wall time " << std::fixed << std::setprecision(3) << *wall_seconds << " s\n";
    out << (all_passed() ? "consistent" : "INCONSISTENT") << "\n";
    return out.str();
}

}  // namespace matpi
