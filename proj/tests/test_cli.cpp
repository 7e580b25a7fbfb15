#include <doctest.h>

#include <filesystem>
#include <set>

#include "matpi/commands.hpp"
#include "test_helpers.hpp"

using namespace matpi;
using namespace matpi::testing;

namespace {

const std::filesystem::path source_dir{MATPI_SOURCE_DIR};

CommandOptions with_spec(const std::string& name) {
    CommandOptions opt;
    opt.spec = source_dir / "specs" / name;
    return opt;
}

const CheckResult& find_check(const RunReport& r, std::string_view prefix) {
    for (const auto& c : r.checks)
        if (c.name.starts_with(prefix)) return c;
    FAIL("no check named " << prefix);
    return r.checks.front();
}

}  // namespace

TEST_CASE("spec parsing") {
    auto spec = parse_spec(R"({"ring": {"kind": "q"}, "n": 2,
                               "source": {"generators": [[["-2/7", "1"], ["0", "3"]]]},
                               "include_identity": true, "shape": [1, 1]})");
    CHECK(spec.ring == rat);
    CHECK(spec.n == 2);
    REQUIRE(spec.shape.has_value());
    CHECK(*spec.shape == BlockShape::ones(2));
    const auto& g = std::get<GeneratorSet>(spec.source);
    CHECK(g.gens[0].at(0, 0).rational() == mpq_class(-2, 7));
    CHECK(spec.build().dim() == 2);

    auto z = parse_spec(R"({"ring": "zmod:4", "n": 2,
                            "source": {"construction": {"kind": "remark", "n": 2, "modulus": 4, "generator": 2}}})");
    CHECK(z.is_remark());
    CHECK_THROWS_AS(z.build(), Error);
    CHECK(z.build_remark().spanning_set().size() == 3);

    auto c = parse_spec(R"({"ring": {"kind": "gf", "p": 101}, "n": 3, "include_identity": true,
                            "source": {"construction": {"kind": "radical_t", "l": 1, "m": 2}}})");
    CHECK(c.build().dim() == 3);
    CHECK(c.build().is_unital());

    auto a = parse_spec(R"({"n": 2, "ring": {"kind": "q"}, "source": {"construction": {"kind": "upper_triangular", "n": 2}}})");
    auto b = parse_spec(R"({"ring": {"kind": "q"},
        "source": {"construction": {"n": 2, "kind": "upper_triangular"}}, "n": 2})");
    CHECK(a.canonical == b.canonical);
}

TEST_CASE("malformed specs each give a distinct diagnostic") {
    std::set<std::string> messages;
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(source_dir / "tests" / "data" / "malformed")) {
        ++files;
        std::string what;
        try {
            (void)load_spec(entry.path());
        } catch (const Error& e) {
            CHECK(e.code() == Errc::parse_error);
            what = e.what();
        }
        CAPTURE(entry.path().string());
        CHECK_FALSE(what.empty());
        messages.insert(what.substr(what.find(": ") + 2));
    }
    CHECK(files >= 3);
    CHECK(messages.size() == files);

    auto message = [](const std::string& file) {
        try {
            (void)load_spec(source_dir / "tests" / "data" / "malformed" / file);
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("bad_prime.json").find("ring.p: 91 is not prime") != std::string::npos);
    CHECK(message("non_square.json").find("source.generators[0]: matrix is not square (2x3)") != std::string::npos);
    CHECK(message("fraction_in_gf.json").find("source.generators[0][0][1]: fraction") != std::string::npos);
    CHECK(message("syntax_error.json").find("syntax_error.json:4:") != std::string::npos);
    CHECK_THROWS_AS(load_spec(source_dir / "missing.json"), Error);
}

TEST_CASE("report round trip and byte stability") {
    CommandOptions opt;
    opt.n = 2;
    auto first = cmd_verify_al(opt);
    auto second = cmd_verify_al(opt);
    CHECK(first.report.structured() == second.report.structured());
    CHECK(first.report.text() == second.report.text());
    const auto back = RunReport::from_json(json::parse(first.report.structured()));
    CHECK(back == first.report);
    CHECK(back.structured() == first.report.structured());
    CHECK(first.report.input_digest.size() == 64);
    CHECK_THROWS_AS(RunReport::from_json(json::parse(R"({"command": "x"})")), Error);

    opt.timing = true;
    auto timed = cmd_verify_al(opt);
    CHECK(timed.report.wall_seconds.has_value());
    CHECK(RunReport::from_json(timed.report.to_json()) == timed.report);

    CommandOptions r;
    r.n = 3;
    r.mode = CommandOptions::Mode::randomized;
    r.trials = 50;
    r.seed = 9;
    CHECK(cmd_verify_al(r).report.structured() == cmd_verify_al(r).report.structured());
    CHECK(cmd_lemma_suite(CommandOptions{}).report.structured() == cmd_lemma_suite(CommandOptions{}).report.structured());
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("verify-al examples") {
    CommandOptions opt;
    opt.n = 3;
    auto res = cmd_verify_al(opt);
    CHECK(res.exit_code == exit_consistent);
    CHECK(res.report.checks.size() == 4);
    CHECK(find_check(res.report, "s_6 is an identity").detail["tuples_checked"] == 84);

    opt.n = 2;
    opt.ring = rat;
    res = cmd_verify_al(opt);
    CHECK(res.exit_code == exit_consistent);
    const auto& s3 = find_check(res.report, "s_3 is not");
    CHECK(s3.detail["witness"]["tuple"] == to_json(staircase(2, rat)));
    CHECK(s3.detail["witness"]["value"] == to_json(e(2, 1, 2, rat)));

    opt.n = 5;
    opt.mode = CommandOptions::Mode::exhaustive;
    CHECK_THROWS_AS(cmd_verify_al(opt), Error);
    opt.ring = RingSpec::integers_mod(4);
    opt.n = 2;
    CHECK_THROWS_AS(cmd_verify_al(opt), Error);
}

TEST_CASE("classify examples") {
    auto fb = cmd_classify(with_spec("full_block_1_2.json"));
    CHECK(fb.exit_code == exit_consistent);
    CHECK(fb.report.checks[0].detail["verdict"]["kind"] == "FullBlockTriangular");
    CHECK(fb.report.checks[0].detail["s_2n-2"]["identity"] == false);

    auto rep = cmd_classify(with_spec("repetition_1_1.json"));
    CHECK(rep.exit_code == exit_consistent);
    CHECK(rep.report.checks[0].detail["verdict"]["summary"] == "SatisfiesLowDegree(Repetition(1,3))");
    CHECK(rep.report.checks[0].detail["s_2n-2"]["identity"] == true);

    auto de = cmd_classify(with_spec("diagonal_embedding_2_2.json"));
    CHECK(de.exit_code == exit_consistent);
    CHECK(de.report.checks[0].detail["verdict"]["kind"] == "SatisfiesLowDegree");
    CHECK(de.report.checks[0].detail["s_2n-2"]["identity"] == true);

    CHECK_THROWS_AS(cmd_classify(with_spec("remark_3.json")), Error);
    CHECK_THROWS_AS(cmd_classify(CommandOptions{}), Error);
}

TEST_CASE("min-degree, identity-space and lemma-suite examples") {
    auto u3 = cmd_min_degree(with_spec("upper_triangular_3.json"));
    CHECK(u3.exit_code == exit_consistent);
    CHECK(u3.report.checks[0].detail["degree"] == 6);

    CommandOptions m2;
    m2.n = 2;
    m2.degree = 4;
    auto sp = cmd_identity_space(m2);
    CHECK(sp.exit_code == exit_consistent);
    CHECK(sp.report.checks[0].detail["dimension"] == 1);
    m2.degree = 3;
    CHECK(cmd_identity_space(m2).report.checks[0].detail["dimension"] == 0);

    auto suite = cmd_lemma_suite(CommandOptions{});
    CHECK(suite.exit_code == exit_consistent);
    CHECK(find_check(suite.report, "Z/4 algebra with (1,2) entry in (2) fails s_2,").passed);
    CHECK(find_check(suite.report, "Z/4 algebra with (1,2) entry in (2) fails s_4,").passed);

    auto remark = cmd_min_degree(with_spec("remark_3.json"));
    CHECK(remark.report.checks[0].detail["degree"] == 6);
}

TEST_CASE("run_command dispatch") {
    CommandOptions opt;
    opt.n = 2;
    CHECK(run_command("verify-al", opt).exit_code == exit_consistent);
    CHECK_THROWS_AS(run_command("nope", opt), Error);
}
