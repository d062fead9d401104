#include "antiham/doubling.hpp"

#include <string>

namespace antiham {

DoubledSpace::DoubledSpace(Index base_dim) : base_dim_(base_dim) {
  if (base_dim < 1) throw ContractError("DoubledSpace: base_dim must be >= 1");
  const Index n = base_dim;
  v_ = Matrix::Zero(2 * n, 2 * n);
  v_.block(0, n, n, n) = Matrix::Identity(n, n);
  j_ = v_.adjoint() - v_;
  l_ = v_ * v_.adjoint() - v_.adjoint() * v_;
}

Matrix lift_operator(const Matrix& m) {
  require_square(m, "lift_operator");
  const Index n = m.rows();
  Matrix out = Matrix::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = m;
  out.bottomRightCorner(n, n) = m;
  return out;
}

RealLinearOp lift_operator(const RealLinearOp& m) {
  return {lift_operator(m.linear_part()), lift_operator(m.antilinear_part())};
}

DensityMatrix lift_density(const DensityMatrix& rho) {
  return DensityMatrix(0.5 * lift_operator(rho.matrix()));
}

Vector lift_pure(const Vector& psi) {
  Vector out = Vector::Zero(2 * psi.size());
  out.head(psi.size()) = psi;
  return out;
}

ConstraintCheck check_lift_constraint(const RealLinearOp& m,
                                      const DoubledSpace& space, double tol) {
  require_same_dim(m.dim(), space.total_dim(), "check_lift_constraint");
  const auto v = RealLinearOp::linear(space.v());
  const auto v_dag = RealLinearOp::linear(space.v_dagger());
  const double violation =
      std::max(max_abs(commutator(v, m)), max_abs(commutator(v_dag, m)));
  return {violation < tol, violation};
}

ConstraintCheck check_lift_constraint(const Matrix& m, const DoubledSpace& space,
                                      double tol) {
  return check_lift_constraint(RealLinearOp::linear(m), space, tol);
}

RealLinearOp unlift(const RealLinearOp& m, const DoubledSpace& space, double tol) {
  const auto check = check_lift_constraint(m, space, tol);
  if (!check.satisfied) {
    throw NotLiftableError("unlift: operator does not commute with V, V† (violation " +
                           std::to_string(check.max_violation) + ")");
  }
  const Index n = space.base_dim();
  return {m.linear_part().topLeftCorner(n, n), m.antilinear_part().topLeftCorner(n, n)};
}

Matrix unlift(const Matrix& m, const DoubledSpace& space, double tol) {
  return unlift(RealLinearOp::linear(m), space, tol).linear_part();
}

DensityMatrix symmetrize_density(const DensityMatrix& rho,
                                 const DoubledSpace& space) {
  require_same_dim(rho.dim(), space.total_dim(), "symmetrize_density");
  const Matrix s = space.v_dagger() + space.v();
  const Matrix& j = space.j();
  const Matrix& r = rho.matrix();
  // S⁻¹ = S and j⁻¹ = j† = −j.
  const Matrix jr = j * r * j.adjoint();
  const Matrix sum = r + jr + s * r * s + s * jr * s;
  return DensityMatrix(0.25 * sum);
}

QuantumSystem build_system_B(const QuantumSystem& sys_a) {
  if (sys_a.label != SystemLabel::A) {
    throw ContractError("build_system_B: input must be a system A");
  }
  std::vector<Matrix> observables;
  observables.reserve(sys_a.observables.size());
  for (const auto& o : sys_a.observables) observables.push_back(lift_operator(o));

  std::optional<Vector> ground;
  if (sys_a.ground_state) ground = lift_pure(*sys_a.ground_state);

  const Matrix h = lift_operator(sys_a.hamiltonian);
  return QuantumSystem::make(SystemLabel::B, h, h, std::move(observables),
                             std::move(ground));
}

} // namespace antiham
