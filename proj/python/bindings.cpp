#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asccert/certify.hpp"
#include "asccert/construction.hpp"
#include "asccert/cuts.hpp"
#include "asccert/exactmath.hpp"
#include "asccert/io.hpp"

namespace py = pybind11;
using namespace asccert;

namespace {

py::object to_python(const Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

py::int_ to_pyint(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

IntMatrix from_rows(const std::vector<std::vector<py::int_>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = BigInt(py::str(rows[r][c]).cast<std::string>());
  }
  return m;
}

py::list to_rows(const IntMatrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (const auto& v : m.row(r)) row.append(to_pyint(v));
    out.append(row);
  }
  return out;
}

CutFamily enumerate(const Instance& inst, const std::string& strategy) {
  if (strategy == "brute") return enumerate_bruteforce(inst.graph);
  if (strategy == "flow") return enumerate_flow(inst.graph);
  throw std::invalid_argument("strategy must be 'brute' or 'flow'");
}

}  // namespace

PYBIND11_MODULE(_asccert, m) {
  m.doc() = "Small-cut cover LP counterexample: construction and exact certification";

  py::register_exception<InvalidK>(m, "InvalidK", PyExc_ValueError);
  py::register_exception<EnumerationError>(m, "EnumerationError", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("build_instance", [](int k) { return to_python(instance_to_json(build_instance(k))); },
        py::arg("k"), "Instance document for an even k >= 4.");
  m.def("incidence_matrix", [](int k) { return to_rows(build_incidence_matrix(build_instance(k))); },
        py::arg("k"));
  m.def("circulant", [](int k) { return to_rows(build_circulant(k)); }, py::arg("k"));
  m.def("det", [](const std::vector<std::vector<py::int_>>& rows) { return to_pyint(det_bareiss(from_rows(rows))); },
        py::arg("matrix"), "Exact determinant of a square integer matrix.");
  m.def("rank", [](const std::vector<std::vector<py::int_>>& rows) { return rank(from_rows(rows)); },
        py::arg("matrix"), "Exact rank of an integer matrix.");

  m.def(
      "small_cuts",
      [](int k, const std::string& strategy) {
        const Instance inst = build_instance(k);
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const auto& c : enumerate(inst, strategy).cuts) out.emplace_back(c.side().members(), c.capacity());
        return out;
      },
      py::arg("k"), py::arg("strategy") = "flow",
      "Every cut below lambda as (canonical side, capacity).");
  m.def(
      "probe",
      [](int k, std::size_t trials, std::uint64_t seed) {
        const Instance inst = build_instance(k);
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const auto& c : karger_probe(inst.graph, trials, seed).cuts)
          out.emplace_back(c.side().members(), c.capacity());
        return out;
      },
      py::arg("k"), py::arg("trials"), py::arg("seed") = 1);

  m.def(
      "verify",
      [](int k, const std::string& strategy) {
        const Instance inst = build_instance(k);
        const CertifiedRun run = certify(inst, enumerate(inst, strategy));
        RunInfo info;
        info.strategy = strategy;
        return to_python(certificate_to_json(run.certificate, &run.reduction, info));
      },
      py::arg("k"), py::arg("strategy") = "flow");
  m.def(
      "reduce",
      [](int k) {
        const ReductionResult red = full_reduction(build_instance(k));
        Json traces = Json::array();
        for (const auto& t : red.traces) traces.push_back(trace_to_json(t));
        return py::make_tuple(red.ok, to_python(traces));
      },
      py::arg("k"), "(ok, traces) of the Q-row reduction.");
  m.def("export_lp", [](int k) { return to_lp(build_instance(k)); }, py::arg("k"));
  m.def(
      "to_dot",
      [](int k, const std::string& kind) {
        if (kind != "capgraph" && kind != "links") throw std::invalid_argument("kind must be 'capgraph' or 'links'");
        return to_dot(build_instance(k), kind == "capgraph" ? DotKind::CapGraph : DotKind::Links);
      },
      py::arg("k"), py::arg("kind") = "capgraph");
}
