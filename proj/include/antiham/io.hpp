#pragma once

#include <nlohmann/json.hpp>

#include "antiham/c_transform.hpp"
#include "antiham/doubling.hpp"
#include "antiham/reallinear.hpp"
#include "antiham/system.hpp"

// JSON exchange formats.
//
//   matrix        {"rows": n, "cols": m, "data": [[re, im], ...]}  row-major
//   real-linear   {"dim": n, "linear": <matrix>, "antilinear": <matrix>}
//   system        {"label", "dim", "hamiltonian", "energy_observable",
//                  "observables": [<matrix>...]}  (+ optional "ground_state")
//   doubled space {"base_dim": n}
//   C bundle      system document + {"j": <matrix>, "u": <real-linear>}

namespace antiham::io {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

json op_to_json(const RealLinearOp& op);
RealLinearOp op_from_json(const json& j);

json system_to_json(const QuantumSystem& sys);
QuantumSystem system_from_json(const json& j);

json space_to_json(const DoubledSpace& space);
DoubledSpace space_from_json(const json& j);

json bundle_to_json(const SystemCBundle& bundle);

} // namespace antiham::io
