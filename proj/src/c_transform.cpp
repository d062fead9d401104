#include "antiham/c_transform.hpp"

#include <string>

namespace antiham {

namespace {

RealLinearOp make_u(const DoubledSpace& space) {
  const Index n = space.total_dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix ij = kI * space.j();
  return {0.5 * (id - ij), 0.5 * (id + ij) * space.l()};
}

} // namespace

UTransform::UTransform(DoubledSpace space)
    : space_(std::move(space)), u_(make_u(space_)) {}

UTransform build_U(const DoubledSpace& space) { return UTransform(space); }

RealLinearOp transform_op(const UTransform& u, const RealLinearOp& m) {
  require_same_dim(u.dim(), m.dim(), "transform_op");
  return compose(u.op(), compose(m, u.op()));
}

RealLinearOp transform_op_commuting(const UTransform& u, const RealLinearOp& m) {
  require_same_dim(u.dim(), m.dim(), "transform_op_commuting");
  const Index n = u.dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix ij = kI * u.space().j();
  const auto kl = compose(RealLinearOp::conjugation(n),
                          RealLinearOp::linear(u.space().l()));
  const auto klmkl = compose(kl, compose(m, kl));
  return compose(RealLinearOp::linear(0.5 * (id - ij)), m) +
         compose(RealLinearOp::linear(0.5 * (id + ij)), klmkl);
}

Matrix build_observable_C(const UTransform& u, const Matrix& o_b, double tol) {
  require_square(o_b, "build_observable_C");
  require_same_dim(u.dim(), o_b.rows(), "build_observable_C");
  if (!is_self_adjoint(o_b, tol)) {
    throw ContractError("build_observable_C: observable is not self-adjoint");
  }
  const auto check = check_lift_constraint(o_b, u.space(), tol);
  if (!check.satisfied) {
    throw NotLiftableError("build_observable_C: not a system-B observable (violation " +
                           std::to_string(check.max_violation) + ")");
  }
  const auto o_c = transform_op(u, RealLinearOp::linear(o_b));
  if (!o_c.is_linear(tol)) {
    throw ContractError("build_observable_C: transformed observable is not linear");
  }
  return o_c.linear_part();
}

Matrix SystemCBundle::grading() const { return -kI * j_matrix; }

SystemCBundle build_system_C(const QuantumSystem& sys_b, const DoubledSpace& space,
                             double tol) {
  if (sys_b.label != SystemLabel::B) {
    throw ContractError("build_system_C: input must be a system B");
  }
  require_same_dim(sys_b.dim(), space.total_dim(), "build_system_C");
  UTransform u(space);

  Matrix energy_c = build_observable_C(u, sys_b.energy_observable, tol);
  if (max_abs(Matrix(sys_b.hamiltonian - sys_b.energy_observable)) >= tol) {
    throw ContractError("build_system_C: system B hamiltonian and energy differ");
  }
  Matrix hamiltonian_c = -kI * space.j() * energy_c;

  std::vector<Matrix> observables;
  observables.reserve(sys_b.observables.size());
  for (const auto& o : sys_b.observables) {
    observables.push_back(build_observable_C(u, o, tol));
  }

  std::optional<Vector> ground;
  if (sys_b.ground_state) ground = map_state_C(u, *sys_b.ground_state);

  auto system = QuantumSystem::make(SystemLabel::C, hamiltonian_c, energy_c,
                                    std::move(observables), std::move(ground), tol);
  return SystemCBundle{std::move(system), std::move(hamiltonian_c),
                       std::move(energy_c), space.j(), std::move(u)};
}

Vector map_state_C(const UTransform& u, const Vector& psi_b) {
  require_same_dim(u.dim(), psi_b.size(), "map_state_C");
  return antiham::apply(u.op(), psi_b);
}

DensityMatrix map_ensemble_C(const UTransform& u, const RealVector& probabilities,
                             const Matrix& states) {
  require_same_dim(u.dim(), states.rows(), "map_ensemble_C");
  Matrix mapped(states.rows(), states.cols());
  for (Index k = 0; k < states.cols(); ++k) {
    mapped.col(k) = antiham::apply(u.op(), states.col(k));
  }
  return DensityMatrix::from_ensemble(probabilities, mapped);
}

DensityMatrix map_density_C(const UTransform& u, const DensityMatrix& rho_b) {
  return map_ensemble_C(u, rho_b.probabilities(), rho_b.eigenvectors());
}

RealLinearOp real_part_density(const RealVector& probabilities,
                               const Matrix& states) {
  require_same_dim(probabilities.size(), states.cols(), "real_part_density");
  const Index n = states.rows();
  Matrix linear = Matrix::Zero(n, n);
  Matrix antilinear = Matrix::Zero(n, n);
  // Re(Ψ†Φ) = ½(Ψ†Φ + Ψᵀ·conj(Φ)).
  for (Index k = 0; k < states.cols(); ++k) {
    linear += 0.5 * probabilities(k) * states.col(k) * states.col(k).adjoint();
    antilinear += 0.5 * probabilities(k) * states.col(k) * states.col(k).transpose();
  }
  return {linear, antilinear};
}

Matrix map_density_C_via_real_part(const UTransform& u,
                                   const DensityMatrix& rho_b) {
  require_same_dim(u.dim(), rho_b.dim(), "map_density_C_via_real_part");
  const auto rho_r = real_part_density(rho_b.probabilities(), rho_b.eigenvectors());
  const auto x = compose(u.op(), compose(rho_r, adjoint(u.op())));
  const auto i_op = RealLinearOp::scalar(u.dim(), kI);
  const auto rho_c = x - compose(i_op, compose(x, i_op));
  return rho_c.linear_part();
}

} // namespace antiham
