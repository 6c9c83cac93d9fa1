// Python bindings for the core operations: fields, linearized polynomials,
// codes, the list decoder and the brute-force oracle.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gabidulin/decoder.hpp"
#include "gabidulin/linalg.hpp"
#include "gabidulin/oracle.hpp"
#include "gabidulin/selftest.hpp"
#include "gabidulin/serialization.hpp"

namespace py = pybind11;
using namespace gabidulin;

namespace {

std::string element_repr(const FieldElement& e) {
    std::ostringstream os;
    os << "FieldElement([";
    for (std::size_t i = 0; i < e.digits().size(); ++i) {
        if (i) os << ", ";
        os << e.digits()[i];
    }
    os << "])";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gabidulin rank-metric codes: encoding and minimal list decoding";

    py::register_exception<Error>(m, "GabidulinError", PyExc_ValueError);
    py::register_exception<AmbiguousError>(m, "Ambiguous", PyExc_ValueError);

    py::class_<FieldElement>(m, "FieldElement")
        .def(py::init<std::vector<Digit>>(), py::arg("digits"))
        .def_property_readonly("digits",
                               [](const FieldElement& e) { return e.digits(); })
        .def("is_zero", &FieldElement::is_zero)
        .def(py::self == py::self)
        .def("__hash__",
             [](const FieldElement& e) {
                 std::size_t h = 1469598103934665603ull;
                 for (Digit d : e.digits()) h = (h ^ d) * 1099511628211ull;
                 return h;
             })
        .def("__repr__", &element_repr);

    py::class_<Field, std::shared_ptr<Field>>(m, "Field")
        .def(py::init([](Digit q, int m_, std::optional<std::vector<Digit>> modulus) {
                 // The library hands out immutable shared contexts; pybind11
                 // needs a non-const holder.
                 return std::const_pointer_cast<Field>(modulus ? Field::make(q, m_, *modulus)
                                                               : Field::make(q, m_));
             }),
             py::arg("q"), py::arg("m"), py::arg("modulus") = std::nullopt)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("m", &Field::m)
        .def_property_readonly("modulus", &Field::modulus)
        .def_property_readonly("size", &Field::size)
        .def("zero", &Field::zero)
        .def("one", &Field::one)
        .def("alpha", &Field::alpha)
        .def("element", &Field::from_digits, py::arg("digits"))
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("scalar_mul", &Field::scalar_mul)
        .def("frobenius", &Field::frobenius, py::arg("x"), py::arg("i") = 1)
        .def("frobenius_inv", &Field::frobenius_inv, py::arg("x"), py::arg("i") = 1)
        .def("index", &Field::index)
        .def("from_index", &Field::from_index)
        .def("alpha_pow", &Field::alpha_pow)
        .def("log_alpha", &Field::log_alpha)
        .def("has_exp_table", &Field::has_exp_table)
        .def("to_string", &Field::to_string)
        .def(py::self == py::self)
        .def("__repr__", [](const Field& f) {
            return "Field(q=" + std::to_string(f.q()) + ", m=" + std::to_string(f.m()) + ")";
        });

    py::class_<LinPoly>(m, "LinPoly")
        .def(py::init<FieldPtr, std::vector<FieldElement>>(), py::arg("field"),
             py::arg("coeffs"))
        .def_static("zero", [](FieldPtr f) { return LinPoly(std::move(f)); })
        .def_static("identity", &LinPoly::identity)
        .def_static("monomial", &LinPoly::monomial)
        .def_property_readonly("field", &LinPoly::field)
        .def_property_readonly("coeffs", &LinPoly::coeffs)
        .def_property_readonly("qdeg", &LinPoly::qdeg)
        .def("is_zero", &LinPoly::is_zero)
        .def("is_monic", &LinPoly::is_monic)
        .def("coeff", &LinPoly::coeff)
        .def("evaluate", &LinPoly::evaluate)
        .def("compose", &LinPoly::compose)
        .def("scaled", &LinPoly::scaled)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const LinPoly& p) { return "<LinPoly " + p.to_string() + ">"; })
        .def("__str__", &LinPoly::to_string);

    m.def("left_divide", &left_divide, "f = h o g + r; returns (h, r)");
    m.def("right_divide", &right_divide, "f = g o m + r; returns (m, r)");
    m.def(
        "annihilator",
        [](const FieldPtr& f, const Word& basis) { return annihilator(f, basis); },
        py::arg("field"), py::arg("basis"));
    m.def("q_lagrange", &q_lagrange, py::arg("field"), py::arg("g"), py::arg("r"));
    m.def("root_space", &root_space);
    m.def(
        "rank_distance",
        [](const FieldPtr& f, const Word& x, const Word& y) { return rank_distance(*f, x, y); },
        py::arg("field"), py::arg("x"), py::arg("y"));

    py::class_<Code>(m, "Code")
        .def(py::init([](FieldPtr f, int n, int k, std::optional<Word> g) {
                 return g ? Code(std::move(f), n, k, std::move(*g))
                          : Code::standard(std::move(f), n, k);
             }),
             py::arg("field"), py::arg("n"), py::arg("k"), py::arg("g") = std::nullopt)
        .def_property_readonly("field", &Code::field)
        .def_property_readonly("n", &Code::n)
        .def_property_readonly("k", &Code::k)
        .def_property_readonly("g", &Code::g)
        .def_property_readonly("min_distance", &Code::min_distance)
        .def("message", &Code::message)
        .def("encode", py::overload_cast<const LinPoly&>(&Code::encode, py::const_))
        .def("encode",
             py::overload_cast<const std::vector<FieldElement>&>(&Code::encode, py::const_))
        .def("__repr__", [](const Code& c) {
            return "Code(q=" + std::to_string(c.field()->q()) +
                   ", m=" + std::to_string(c.field()->m()) + ", n=" + std::to_string(c.n()) +
                   ", k=" + std::to_string(c.k()) + ")";
        });

    m.def("random_error", &random_error, py::arg("code"), py::arg("t"), py::arg("seed"));
    m.def(
        "error_span_poly",
        [](const FieldPtr& f, const Word& e) { return error_span_poly(f, e); },
        py::arg("field"), py::arg("e"));

    py::class_<ModuleElement>(m, "ModuleElement")
        .def(py::init<LinPoly, LinPoly>(), py::arg("f1"), py::arg("f2"))
        .def_readonly("f1", &ModuleElement::f1)
        .def_readonly("f2", &ModuleElement::f2)
        .def(py::self == py::self);

    py::class_<InterpolationBasis>(m, "InterpolationBasis")
        .def_readonly("row1", &InterpolationBasis::row1)
        .def_readonly("row2", &InterpolationBasis::row2);

    py::class_<MinimalBasis>(m, "MinimalBasis")
        .def_readonly("g1", &MinimalBasis::g1)
        .def_readonly("g2", &MinimalBasis::g2)
        .def_readonly("l1", &MinimalBasis::l1)
        .def_readonly("l2", &MinimalBasis::l2);

    py::class_<DecodeEntry>(m, "DecodeEntry")
        .def_readonly("message", &DecodeEntry::message)
        .def_readonly("codeword", &DecodeEntry::codeword);

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("distance", &DecodeResult::distance)
        .def_readonly("entries", &DecodeResult::entries);

    py::class_<OracleEntry>(m, "OracleEntry")
        .def_readonly("message", &OracleEntry::message)
        .def_readonly("codeword", &OracleEntry::codeword)
        .def_readonly("distance", &OracleEntry::distance);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("min_distance", &OracleResult::min_distance)
        .def_readonly("closest", &OracleResult::closest)
        .def_readonly("histogram", &OracleResult::histogram);

    m.def("vanishes_at_points", &vanishes_at_points);
    m.def("in_module", &in_module);
    m.def("interpolation_module", &interpolation_module);
    m.def("weighted_qdeg", &weighted_qdeg);
    m.def("minimal_basis", &minimal_basis);
    m.def("check_candidate", &check_candidate);
    m.def("list_decode", &list_decode, py::arg("code"), py::arg("r"),
          py::arg("budget") = kDefaultCandidateBudget);
    m.def("enumerate_distance_t", &enumerate_distance_t, py::arg("code"), py::arg("r"),
          py::arg("t"), py::arg("budget") = kDefaultCandidateBudget);
    m.def("decode_unique", &decode_unique, py::arg("code"), py::arg("r"),
          py::arg("budget") = kDefaultCandidateBudget);
    m.def("oracle_closest", &oracle_closest, py::arg("code"), py::arg("r"),
          py::arg("budget") = kDefaultOracleBudget);
    m.def("oracle_within", &oracle_within, py::arg("code"), py::arg("r"), py::arg("t"),
          py::arg("budget") = kDefaultOracleBudget);

    m.def("code_to_json", [](const Code& c) { return code_to_json(c).dump(2); });
    m.def("code_from_json", [](const std::string& s) { return code_from_json(json::parse(s)); });
    m.def("field_to_json", [](const FieldPtr& f) { return field_to_json(*f).dump(2); });
    m.def("field_from_json",
          [](const std::string& s) { return field_from_json(json::parse(s)); });
    m.def("decode_result_to_json",
          [](const DecodeResult& r) { return decode_result_to_json(r).dump(2); });

    m.def("run_selftest", []() {
        std::ostringstream os;
        const bool ok = selftest::run_all(os);
        return py::make_tuple(ok, os.str());
    });
}
