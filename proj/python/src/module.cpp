#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "butson/catalog.hpp"
#include "butson/equivalence.hpp"
#include "butson/errors.hpp"
#include "butson/fingerprint.hpp"
#include "butson/polynomial.hpp"
#include "butson/report.hpp"
#include "butson/spectrum.hpp"
#include "butson/symmetric.hpp"
#include "butson/textio.hpp"

namespace py = pybind11;
using namespace butson;

namespace {

std::vector<std::vector<std::int64_t>> coefficient_lists(const std::vector<CycInt>& coeffs) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& c : coeffs) out.emplace_back(c.coeffs().begin(), c.coeffs().end());
  return out;
}

py::dict witness_dict(const Witness& w, int q) {
  py::dict d;
  d["q"] = q;
  d["row_perm"] = w.row_perm;
  d["col_perm"] = w.col_perm;
  d["left"] = w.left.exps;
  d["right"] = w.right.exps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tools for Butson-type complex Hadamard matrices";

  static py::exception<NumericFailure> numeric_failure(m, "NumericFailure", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UnknownMatrix& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    } catch (const NumericFailure& e) {
      PyErr_SetString(numeric_failure.ptr(), e.what());
    } catch (const ArithmeticOverflow& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  py::class_<ButsonMatrix>(m, "ButsonMatrix")
      .def(py::init(&ButsonMatrix::from_exponents), py::arg("q"), py::arg("grid"),
           "Matrix with entries exp(2 pi i grid[i][j] / q); exponents are reduced mod q.")
      .def_property_readonly("q", &ButsonMatrix::order)
      .def_property_readonly("n", &ButsonMatrix::size)
      .def_property_readonly("grid", &ButsonMatrix::grid)
      .def("embed",
           [](const ButsonMatrix& b) {
             const ComplexMatrix c = b.embed();
             std::vector<std::vector<std::complex<double>>> rows(static_cast<std::size_t>(b.size()));
             for (int i = 0; i < b.size(); ++i)
               for (int j = 0; j < b.size(); ++j) rows[static_cast<std::size_t>(i)].push_back(c(i, j));
             return rows;
           })
      .def("permuted", &ButsonMatrix::permuted, py::arg("rows"), py::arg("cols"))
      .def("transpose", &ButsonMatrix::transpose)
      .def("conj", &ButsonMatrix::conj)
      .def("lift", &ButsonMatrix::lift, py::arg("m"))
      .def(py::self == py::self)
      .def("__repr__", [](const ButsonMatrix& b) { return "<ButsonMatrix q=" + std::to_string(b.order()) + " n=" + std::to_string(b.size()) + ">"; })
      .def("__str__", [](const ButsonMatrix& b) { return format_matrix(b); });

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });
  m.def("get", [](const std::string& name) { return get(name); }, py::arg("name"));
  m.def("parse", [](const std::string& text) {
    auto parsed = parse_matrix(text);
    if (auto* b = std::get_if<ButsonMatrix>(&parsed)) return *b;
    throw py::value_error("only exponent (BH) matrices are supported");
  }, py::arg("text"));

  m.def("is_hadamard", &is_hadamard_exact, py::arg("matrix"));
  m.def("dephase", [](const ButsonMatrix& b) {
    const Dephased d = dephase(b);
    return py::make_tuple(d.matrix, d.left.exps, d.right.exps);
  }, py::arg("matrix"), "Returns (standard form, left phases, right phases).");

  m.def("charpoly", [](const ButsonMatrix& b) { return coefficient_lists(scale(charpoly_exact(b), b.size()).e); },
        py::arg("matrix"),
        "Coefficients e_k of det(xI - H/sqrt(n)) = sum_k e_k n^(-(n-k)/2) x^k, each as its power-basis coefficient list.");
  m.def("same_charpoly", [](const ButsonMatrix& a, const ButsonMatrix& b) {
    return poly_eq(scale(charpoly_exact(a), a.size()), scale(charpoly_exact(b), b.size()));
  }, py::arg("a"), py::arg("b"));
  m.def("spectrum", [](const ButsonMatrix& b, double tol) {
    std::vector<std::pair<std::complex<double>, int>> out;
    for (const auto& ev : spectrum_numeric(scale(charpoly_exact(b), b.size()), tol).values) out.emplace_back(ev.value, ev.multiplicity);
    return out;
  }, py::arg("matrix"), py::arg("tol") = 1e-8, "Eigenvalues of H/sqrt(n) as (value, multiplicity) pairs.");

  m.def("haagerup_set", [](const ButsonMatrix& b) { return haagerup_set(b).counts; }, py::arg("matrix"));
  m.def("defect", [](const ButsonMatrix& b, double tol) { return defect(b, tol); }, py::arg("matrix"), py::arg("tol") = 1e-8);

  m.def("standard_equivalent", [](const ButsonMatrix& a, const ButsonMatrix& b) -> py::object {
    const EquivVerdict v = standard_equivalent(a, b);
    if (!v.equivalent) return py::none();
    return witness_dict(*v.witness, v.order);
  }, py::arg("a"), py::arg("b"), "Witness dict mapping b onto a, or None.");
  m.def("apply_witness", [](const py::dict& w, const ButsonMatrix& b) {
    const int q = w["q"].cast<int>();
    const Witness witness{w["row_perm"].cast<std::vector<int>>(), w["col_perm"].cast<std::vector<int>>(),
                          PhaseVector{q, w["left"].cast<std::vector<int>>()}, PhaseVector{q, w["right"].cast<std::vector<int>>()}};
    return apply_witness(witness, b);
  }, py::arg("witness"), py::arg("matrix"));
  m.def("unitary_equivalent", &unitary_equivalent, py::arg("a"), py::arg("b"));
  m.def("classify", [](const std::vector<ButsonMatrix>& ms, const std::string& relation) {
    if (relation != "standard" && relation != "unitary") throw py::value_error("relation must be 'standard' or 'unitary'");
    return classify(ms, relation == "standard" ? Relation::standard : Relation::unitary);
  }, py::arg("matrices"), py::arg("relation") = "unitary");

  m.def("symmetric_family_eigenvalues", [](double a, double tol) { return eig_real_symmetric(agaian_symmetric(a), tol); },
        py::arg("a"), py::arg("tol") = 1e-10);

  m.def("report", [](bool as_json) {
    const auto claims = evaluate_claims();
    return as_json ? render_json(claims) : render_markdown(claims);
  }, py::arg("json") = true);
}
