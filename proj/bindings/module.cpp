// Python bindings for the certificate constructions and the two-squares
// oracle. Arbitrary-precision values cross the boundary as Python ints.
#include "tss/certificate.hpp"
#include "tss/errors.hpp"
#include "tss/factorization.hpp"
#include "tss/families.hpp"
#include "tss/littlewood.hpp"
#include "tss/pell.hpp"
#include "tss/two_squares.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// cpp_int <-> Python int, via decimal strings
template <>
struct type_caster<tss::Int> {
    PYBIND11_TYPE_CASTER(tss::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = tss::Int(py::cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const tss::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

py::dict parameters_dict(const tss::SequenceCertificate& cert) {
    py::dict out;
    for (const auto& [key, value] : cert.parameters) out[py::str(key)] = py::cast(value);
    return out;
}

}  // namespace

PYBIND11_MODULE(_tss, m) {
    m.doc() = "finite sequences of integers expressible as sums of two squares";

    py::register_exception<tss::FactorizationTimeout>(m, "FactorizationTimeout");
    py::register_exception<tss::MalformedDocument>(m, "MalformedDocument");
    py::register_exception<tss::MalformedSource>(m, "MalformedSource");
    py::register_exception<tss::DegenerateOffsets>(m, "DegenerateOffsets");
    py::register_exception<tss::SingularParams>(m, "SingularParams");
    py::register_exception<tss::NonIntegralSolution>(m, "NonIntegralSolution");

    py::class_<tss::TwoSquareRep>(m, "TwoSquareRep")
        .def_readonly("a", &tss::TwoSquareRep::a)
        .def_readonly("b", &tss::TwoSquareRep::b)
        .def_readonly("value", &tss::TwoSquareRep::value)
        .def_property_readonly("nonzero", &tss::TwoSquareRep::nonzero)
        .def("__repr__", [](const tss::TwoSquareRep& rep) {
            return "TwoSquareRep(" + tss::to_decimal(rep.a) + ", " + tss::to_decimal(rep.b) +
                   ")";
        });

    py::class_<tss::CertTerm>(m, "CertTerm")
        .def_readonly("offset", &tss::CertTerm::offset)
        .def_readonly("value", &tss::CertTerm::value)
        .def_readonly("rep", &tss::CertTerm::rep)
        .def_readonly("nonzero", &tss::CertTerm::nonzero);

    py::class_<tss::SequenceCertificate>(m, "SequenceCertificate")
        .def_readonly("method", &tss::SequenceCertificate::method)
        .def_readonly("n", &tss::SequenceCertificate::n)
        .def_readonly("terms", &tss::SequenceCertificate::terms)
        .def_property_readonly("parameters", &parameters_dict)
        .def("to_json",
             [](const tss::SequenceCertificate& cert, bool pretty) {
                 return tss::serialize_certificate(cert, pretty);
             },
             py::arg("pretty") = true)
        .def("verify",
             [](const tss::SequenceCertificate& cert) {
                 tss::VerifyResult result = tss::verify_certificate(cert);
                 return py::make_tuple(result.ok, result.reason);
             })
        .def("__repr__", [](const tss::SequenceCertificate& cert) {
            return "<SequenceCertificate " + cert.method + " n=" + tss::to_decimal(cert.n) +
                   ">";
        });

    m.def("parse_certificate", &tss::parse_certificate, py::arg("json_text"));
    m.def("format_certificate", &tss::format_certificate, py::arg("certificate"));

    m.def(
        "factorize",
        [](const tss::Int& n, std::uint64_t budget) {
            std::vector<std::pair<tss::Int, unsigned>> out;
            for (const auto& pp : tss::factorize(n, budget).factors)
                out.push_back({pp.prime, pp.exponent});
            return out;
        },
        py::arg("n"), py::arg("budget") = tss::kDefaultFactorBudget);

    m.def(
        "is_sum_of_two_squares",
        [](const tss::Int& n, std::uint64_t budget) {
            return tss::is_sum_of_two_squares(n, budget);
        },
        py::arg("n"), py::arg("budget") = tss::kDefaultFactorBudget);

    m.def(
        "two_square_decompositions",
        [](const tss::Int& n, std::uint64_t budget) {
            std::vector<std::pair<tss::Int, tss::Int>> out;
            for (const auto& rep : tss::two_square_decompositions(n, budget))
                out.push_back({rep.a, rep.b});
            return out;
        },
        py::arg("n"), py::arg("budget") = tss::kDefaultFactorBudget);

    m.def(
        "has_nonzero_two_square_rep",
        [](const tss::Int& n, std::uint64_t budget) {
            return tss::has_nonzero_two_square_rep(n, budget);
        },
        py::arg("n"), py::arg("budget") = tss::kDefaultFactorBudget);

    m.def(
        "verify_rep",
        [](const tss::Int& a, const tss::Int& b, const tss::Int& value) {
            return tss::verify_rep({a, b, value});
        },
        py::arg("a"), py::arg("b"), py::arg("value"));

    m.def("triple", &tss::littlewood::construct, py::arg("h"), py::arg("k"), py::arg("p"),
          py::arg("q"), py::arg("r"), py::arg("strip_squares") = false,
          "certificate for {n, n+h, n+k} all sums of two squares");
    m.def("consecutive_triple", &tss::families::consecutive_triple, py::arg("p"), py::arg("q"),
          py::arg("r"));
    m.def("triple_nonzero_17m5", &tss::families::triple_nonzero_17m5, py::arg("m"));
    m.def(
        "solve_x2_plus_2",
        [](const tss::Int& m, const tss::Int& r) {
            tss::families::QuadParams qp = tss::families::solve_x2_plus_2(m, r);
            return py::make_tuple(qp.t, qp.x, qp.u, qp.v);
        },
        py::arg("m"), py::arg("r"), "returns (t, x, u, v) with x^2 + 2 = u^2 + v^2");
    m.def("quad_n124", &tss::families::quad_n124, py::arg("m"), py::arg("r"));

    m.def(
        "neg_pell_solutions",
        [](std::size_t count) {
            std::vector<std::tuple<tss::Int, tss::Int, std::size_t>> out;
            for (const auto& s : tss::pell::neg_pell_solutions(count))
                out.push_back({s.alpha, s.beta, s.index});
            return out;
        },
        py::arg("count"), "(alpha, beta, index) solving beta^2 - 2 alpha^2 = -1");
    m.def(
        "gen_pell_solutions",
        [](std::size_t count) {
            std::vector<std::tuple<tss::Int, tss::Int, std::size_t>> out;
            for (const auto& s : tss::pell::gen_pell_solutions(count))
                out.push_back({s.alpha, s.beta, s.index});
            return out;
        },
        py::arg("count"), "(alpha, beta, index) solving beta^2 - 3 alpha^2 = -18");
    m.def(
        "quint_x_values",
        [](std::size_t count) {
            std::vector<tss::Int> out;
            for (const auto& xv : tss::pell::quint_x_values(count)) out.push_back(xv.x);
            return out;
        },
        py::arg("count"));
    m.def(
        "ap_x_values",
        [](std::size_t count) {
            std::vector<tss::Int> out;
            for (const auto& xv : tss::pell::ap_x_values(count)) out.push_back(xv.x);
            return out;
        },
        py::arg("count"));
    m.def("quint_certificates", &tss::pell::quint_certificates, py::arg("count"));
    m.def("ap_certificates", &tss::pell::ap_certificates, py::arg("count"));
}
