#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cayleyqc/bounds.hpp"
#include "cayleyqc/cli.hpp"
#include "cayleyqc/css_code.hpp"
#include "cayleyqc/errors.hpp"
#include "cayleyqc/hypercube.hpp"
#include "cayleyqc/matrix_io.hpp"
#include "cayleyqc/report.hpp"
#include "cayleyqc/verify_suites.hpp"

namespace py = pybind11;
using namespace cayleyqc;

namespace {

BitMatrix to_matrix(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(0, cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("ragged matrix rows");
    BitVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] != 0 && row[j] != 1) throw ValidationError("matrix entries must be 0 or 1");
      v.set(j, row[j] == 1);
    }
    m.append_row(std::move(v));
  }
  return m;
}

std::vector<std::vector<int>> from_matrix(const BitMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j) ? 1 : 0;
  }
  return out;
}

std::string analyze_json(const std::vector<std::vector<int>>& h, std::optional<std::size_t> cap) {
  const GeneratorSpec spec(to_matrix(h));
  const auto params = quantum_params(spec, cap);
  const auto degeneracy = degeneracy_report(spec, params);
  return to_json(params, &degeneracy).dump();
}

std::string minimal_json(std::size_t n, std::size_t t, std::optional<std::size_t> cap) {
  const auto m = minimal_t_pseudo_border(n, t, cap);
  Json out = {{"n", n}, {"t", t}, {"status", to_string(m.status)}};
  out["size"] = m.size ? Json(*m.size) : Json(nullptr);
  out["witness"] = m.witness ? to_json(*m.witness) : Json(nullptr);
  if (m.status == SearchStatus::cap_reached) out["size_greater_than"] = m.ruled_out_below_or_at;
  return out.dump();
}

std::string bound_json(const std::string& formula, std::size_t n, std::size_t param) {
  if (formula == "theorem") return to_json(theorem_bound(n, param)).dump();
  if (formula == "corollary") return to_json(corollary_bound(n, param)).dump();
  if (formula == "lemma-k-layer") return to_json(k_layer_bound(n, param)).dump();
  if (formula == "simple") return to_json(simple_bound(n)).dump();
  if (formula == "stirling-floor") return to_json(stirling_floor(n)).dump();
  throw ValidationError("unknown formula '" + formula + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cayley-graph CSS codes over F2^r";

  // Later registrations are tried first, so subclasses go after the base.
  auto& base = py::register_exception<Error>(m, "CayleyQCError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  m.def("parse_matrix", [](const std::string& text) { return from_matrix(parse_matrix(text)); }, py::arg("text"));
  m.def("rank", [](const std::vector<std::vector<int>>& rows) { return rank(to_matrix(rows)); }, py::arg("rows"));
  m.def("kernel_basis", [](const std::vector<std::vector<int>>& rows) {
    return from_matrix(kernel_basis(to_matrix(rows)));
  }, py::arg("rows"));
  m.def("classical_distance", [](const std::vector<std::vector<int>>& h, std::optional<std::size_t> cap) {
    const auto d = classical_distance(GeneratorSpec(to_matrix(h)), cap);
    return std::make_pair(std::string(to_string(d.status)), d.weight);
  }, py::arg("h"), py::arg("cap") = py::none());
  m.def("is_self_orthogonal", [](const std::vector<std::vector<int>>& h) {
    return is_self_orthogonal(CayleyGraph(GeneratorSpec(to_matrix(h))));
  }, py::arg("h"));
  m.def("_analyze", &analyze_json, py::arg("h"), py::arg("cap") = py::none());
  m.def("_minimal_t_pseudo_border", &minimal_json, py::arg("n"), py::arg("t"), py::arg("cap") = py::none());
  m.def("is_t_pseudo_border", [](std::size_t n, std::size_t t, const std::vector<std::vector<std::size_t>>& family) {
    return is_t_pseudo_border(SetFamily::from_lists(n, family), t);
  }, py::arg("n"), py::arg("t"), py::arg("family"));
  m.def("_bound", &bound_json, py::arg("formula"), py::arg("n"), py::arg("param") = 0);
  m.def("_verify", [](const std::string& suite, std::uint64_t seed) {
    return to_json(run_suite(suite, seed), seed).dump();
  }, py::arg("suite"), py::arg("seed") = default_seed);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
  m.attr("default_seed") = default_seed;
}
