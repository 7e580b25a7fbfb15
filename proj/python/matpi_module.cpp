#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "matpi/commands.hpp"

namespace py = pybind11;
using namespace matpi;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::string scalar_text(const py::handle& h) {
    if (py::isinstance<py::bool_>(h)) throw py::type_error("matrix entries must be int or str");
    if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h)) return py::str(h);
    throw py::type_error("matrix entries must be int or str (fractions as \"a/b\")");
}

Matrix matrix_from_rows(const RingSpec& ring, const py::sequence& rows) {
    const std::size_t r = py::len(rows);
    if (r == 0) throw Error(Errc::invalid_argument, "matrix needs at least one row");
    const std::size_t c = py::len(rows[0]);
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = rows[i];
        if (py::len(row) != c) throw Error(Errc::dimension_mismatch, "rows of unequal length");
        for (std::size_t k = 0; k < c; ++k) entries.push_back(Scalar::parse(ring, scalar_text(row[k])));
    }
    return Matrix::from_scalars(ring, r, c, entries);
}

TestMode make_mode(const std::string& mode, std::size_t trials, std::uint64_t seed, std::size_t threads) {
    if (mode == "exhaustive") return TestMode::exhaustive(threads);
    if (mode == "randomized") return TestMode::randomized(trials, seed);
    throw Error(Errc::invalid_argument, "mode must be 'exhaustive' or 'randomized'");
}

}  // namespace

PYBIND11_MODULE(matpi, m) {
    m.doc() = "Exact polynomial-identity checks for subalgebras of matrix algebras";
    m.attr("__version__") = version_string;

    static py::exception<Error> error(m, "MatpiError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<RingSpec>(m, "Ring")
        .def_static("gf", &RingSpec::prime_field, py::arg("p"))
        .def_static("q", &RingSpec::rationals)
        .def_static("zmod", &RingSpec::integers_mod, py::arg("m"))
        .def_static("parse", &RingSpec::parse, py::arg("text"))
        .def_property_readonly("characteristic", &RingSpec::characteristic)
        .def_property_readonly("is_field", &RingSpec::is_field)
        .def("__eq__", [](const RingSpec& a, const RingSpec& b) { return a == b; })
        .def("__hash__", [](const RingSpec& r) { return py::hash(py::str(r.to_string())); })
        .def("__str__", &RingSpec::to_string)
        .def("__repr__", [](const RingSpec& r) { return "Ring(" + r.to_string() + ")"; });

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_rows), py::arg("ring"), py::arg("rows"),
             "Rows of int or str entries; str entries may be fractions \"a/b\" over Q.")
        .def_static("identity", &Matrix::identity, py::arg("ring"), py::arg("n"))
        .def_property_readonly("ring", &Matrix::ring)
        .def_property_readonly("shape", [](const Matrix& x) { return py::make_tuple(x.rows(), x.cols()); })
        .def("to_list", &Matrix::to_string_rows)
        .def("is_zero", &Matrix::is_zero)
        .def("__add__", &Matrix::operator+)
        .def("__sub__", &Matrix::operator-)
        .def("__matmul__", &Matrix::operator*)
        .def("__mul__", &Matrix::operator*)
        .def("__eq__", &Matrix::operator==)
        .def("__repr__", &Matrix::to_string);

    m.def("matrix_unit", &matrix_unit, py::arg("n"), py::arg("i"), py::arg("j"), py::arg("ring"));
    m.def("staircase", &staircase, py::arg("n"), py::arg("ring"));
    m.def("eval_standard_naive", [](const std::vector<Matrix>& xs) { return eval_standard_naive(xs); }, py::arg("mats"));
    m.def("eval_standard_dp", [](const std::vector<Matrix>& xs) { return eval_standard_dp(xs); }, py::arg("mats"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<SubalgebraBasis>(m, "Algebra")
        .def_property_readonly("ring", &SubalgebraBasis::ring)
        .def_property_readonly("n", &SubalgebraBasis::n)
        .def_property_readonly("dim", &SubalgebraBasis::dim)
        .def_property_readonly("basis", &SubalgebraBasis::basis)
        .def("is_unital", &SubalgebraBasis::is_unital)
        .def("contains", [](const SubalgebraBasis& a, const Matrix& x) { return contains(a, x); })
        .def("__eq__", &SubalgebraBasis::operator==)
        .def("__repr__", [](const SubalgebraBasis& a) {
            return "Algebra(dim=" + std::to_string(a.dim()) + ", n=" + std::to_string(a.n()) + ", ring=" +
                   a.ring().to_string() + ")";
        });

    m.def(
        "close_generators",
        [](const RingSpec& ring, std::size_t n, const std::vector<Matrix>& gens, bool include_identity) {
            return close_generators({ring, n, gens, include_identity});
        },
        py::arg("ring"), py::arg("n"), py::arg("gens"), py::arg("include_identity") = false);
    m.def(
        "full_block_algebra",
        [](const std::vector<std::size_t>& shape, const RingSpec& ring) { return full_block_algebra(BlockShape(shape), ring); },
        py::arg("shape"), py::arg("ring"));
    m.def(
        "block_diagonal_algebra",
        [](const std::vector<std::size_t>& shape, const RingSpec& ring) {
            return block_diagonal_algebra(BlockShape(shape), ring);
        },
        py::arg("shape"), py::arg("ring"));
    m.def("upper_triangular", &upper_triangular, py::arg("n"), py::arg("ring"));
    m.def("repetition_algebra", &repetition_algebra, py::arg("l"), py::arg("m"), py::arg("ring"));
    m.def("radical_T", &radical_T, py::arg("l"), py::arg("m"), py::arg("ring"));
    m.def("diagonal_embedding", &diagonal_embedding, py::arg("k"), py::arg("copies"), py::arg("ring"));
    m.def("jacobson_radical", &jacobson_radical, py::arg("algebra"));
    m.def("is_semisimple", &is_semisimple, py::arg("algebra"));

    m.def(
        "is_standard_identity",
        [](const SubalgebraBasis& a, std::size_t t, const std::string& mode, std::size_t trials, std::uint64_t seed,
           std::size_t threads) {
            IdentityReport r;
            {
                py::gil_scoped_release release;
                r = is_standard_identity(a, t, make_mode(mode, trials, seed, threads));
            }
            return to_python(to_json(r));
        },
        py::arg("algebra"), py::arg("t"), py::arg("mode") = "exhaustive", py::arg("trials") = 2000,
        py::arg("seed") = 42, py::arg("threads") = 1);
    m.def(
        "min_standard_degree",
        [](const SubalgebraBasis& a, std::size_t t_max, const std::string& mode, std::size_t trials,
           std::uint64_t seed) {
            MinDegreeResult r;
            {
                py::gil_scoped_release release;
                r = min_standard_degree(a, t_max, make_mode(mode, trials, seed, 1));
            }
            json j{{"degree", r.degree ? json(*r.degree) : json(nullptr)}};
            if (r.parity_cross_check) j["parity_cross_check"] = *r.parity_cross_check;
            json reports = json::array();
            for (const auto& x : r.reports) reports.push_back(to_json(x));
            j["reports"] = std::move(reports);
            return to_python(j);
        },
        py::arg("algebra"), py::arg("t_max"), py::arg("mode") = "exhaustive", py::arg("trials") = 2000,
        py::arg("seed") = 42);
    m.def(
        "multilinear_identity_space",
        [](const SubalgebraBasis& a, std::size_t t) { return to_python(to_json(multilinear_identity_space(a, t))); },
        py::arg("algebra"), py::arg("t"));
    m.def(
        "classify",
        [](const SubalgebraBasis& a, const std::vector<std::size_t>& shape) {
            return to_python(to_json(classify(a, BlockShape(shape))));
        },
        py::arg("algebra"), py::arg("shape"));

    m.def(
        "run",
        [](const std::string& command, std::optional<std::size_t> n, const std::string& ring, const std::string& mode,
           std::optional<std::size_t> trials, std::uint64_t seed, std::optional<std::filesystem::path> spec,
           std::optional<std::size_t> degree, std::size_t threads) {
            CommandOptions opt;
            opt.ring = RingSpec::parse(ring);
            opt.n = n;
            opt.mode = mode == "exhaustive"   ? CommandOptions::Mode::exhaustive
                       : mode == "randomized" ? CommandOptions::Mode::randomized
                       : mode == "auto"       ? CommandOptions::Mode::automatic
                                              : throw Error(Errc::invalid_argument, "unknown mode '" + mode + "'");
            opt.trials = trials;
            opt.seed = seed;
            opt.spec = spec;
            opt.degree = degree;
            opt.threads = threads;
            CommandResult res;
            {
                py::gil_scoped_release release;
                res = run_command(command, opt);
            }
            return py::make_tuple(res.exit_code, to_python(res.report.to_json()));
        },
        py::arg("command"), py::kw_only(), py::arg("n") = py::none(), py::arg("ring") = "gf:101",
        py::arg("mode") = "auto", py::arg("trials") = py::none(), py::arg("seed") = 42, py::arg("spec") = py::none(),
        py::arg("degree") = py::none(), py::arg("threads") = 1,
        "Runs a CLI subcommand; returns (exit_code, report).");
}
