#include "antiham/io.hpp"

#include <string>

namespace antiham::io {

namespace {

cplx entry_from_json(const json& e) {
  if (!e.is_array() || e.size() != 2) {
    throw ContractError("matrix entry must be a [re, im] pair");
  }
  return {e.at(0).get<double>(), e.at(1).get<double>()};
}

json entry_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

} // namespace

json matrix_to_json(const Matrix& m) {
  json data = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) data.push_back(entry_to_json(m(r, c)));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Index>();
  const auto cols = j.at("cols").get<Index>();
  const json& data = j.at("data");
  if (rows < 0 || cols < 0 || !data.is_array() ||
      data.size() != static_cast<std::size_t>(rows * cols)) {
    throw ShapeError("matrix document: data length " + std::to_string(data.size()) +
                     " does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = entry_from_json(data[k++]);
  }
  require_finite(m, "matrix document");
  return m;
}

json vector_to_json(const Vector& v) {
  json data = json::array();
  for (Index k = 0; k < v.size(); ++k) data.push_back(entry_to_json(v(k)));
  return data;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ContractError("vector document must be an array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Index>(k)) = entry_from_json(j[k]);
  return v;
}

json op_to_json(const RealLinearOp& op) {
  return {{"dim", op.dim()},
          {"linear", matrix_to_json(op.linear_part())},
          {"antilinear", matrix_to_json(op.antilinear_part())}};
}

RealLinearOp op_from_json(const json& j) {
  RealLinearOp op(matrix_from_json(j.at("linear")), matrix_from_json(j.at("antilinear")));
  require_same_dim(j.at("dim").get<Index>(), op.dim(), "real-linear document");
  return op;
}

json system_to_json(const QuantumSystem& sys) {
  json observables = json::array();
  for (const auto& o : sys.observables) observables.push_back(matrix_to_json(o));
  json out = {{"label", std::string(to_string(sys.label))},
              {"dim", sys.dim()},
              {"hamiltonian", matrix_to_json(sys.hamiltonian)},
              {"energy_observable", matrix_to_json(sys.energy_observable)},
              {"observables", std::move(observables)}};
  if (sys.ground_state) out["ground_state"] = vector_to_json(*sys.ground_state);
  return out;
}

QuantumSystem system_from_json(const json& j) {
  const auto label = parse_label(j.at("label").get<std::string>());
  Matrix h = matrix_from_json(j.at("hamiltonian"));
  Matrix e = j.contains("energy_observable") ? matrix_from_json(j.at("energy_observable")) : h;
  std::vector<Matrix> observables;
  if (j.contains("observables")) {
    for (const auto& o : j.at("observables")) observables.push_back(matrix_from_json(o));
  }
  std::optional<Vector> ground;
  if (j.contains("ground_state")) ground = vector_from_json(j.at("ground_state"));
  auto sys = QuantumSystem::make(label, std::move(h), std::move(e), std::move(observables),
                                 std::move(ground));
  if (j.contains("dim")) require_same_dim(j.at("dim").get<Index>(), sys.dim(), "system document");
  return sys;
}

json space_to_json(const DoubledSpace& space) { return {{"base_dim", space.base_dim()}}; }

DoubledSpace space_from_json(const json& j) {
  return DoubledSpace(j.at("base_dim").get<Index>());
}

json bundle_to_json(const SystemCBundle& bundle) {
  json out = system_to_json(bundle.system);
  out["j"] = matrix_to_json(bundle.j_matrix);
  out["u"] = op_to_json(bundle.u.op());
  return out;
}

} // namespace antiham::io
