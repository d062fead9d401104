#include "antiham/applications.hpp"

#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace antiham {

ConditionCheck validate_antilinear_condition(const RealLinearOp& h2, double tol) {
  const Index n = h2.dim();
  const auto i_h2 = compose(RealLinearOp::scalar(n, kI), h2);
  const double violation = max_deviation(adjoint(i_h2), -i_h2);
  return {violation < tol, violation};
}

RealMatrix realify(const RealLinearOp& m) {
  const Index n = m.dim();
  const RealMatrix br = m.linear_part().real();
  const RealMatrix bi = m.linear_part().imag();
  const RealMatrix ar = m.antilinear_part().real();
  const RealMatrix ai = m.antilinear_part().imag();
  RealMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = br + ar;
  out.topRightCorner(n, n) = -bi + ai;
  out.bottomLeftCorner(n, n) = bi + ai;
  out.bottomRightCorner(n, n) = br - ar;
  return out;
}

RealVector realify(const Vector& v) {
  RealVector out(2 * v.size());
  out.head(v.size()) = v.real();
  out.tail(v.size()) = v.imag();
  return out;
}

Vector derealify(const RealVector& x) {
  if (x.size() % 2 != 0) throw ShapeError("derealify: odd length");
  const Index n = x.size() / 2;
  Vector out(n);
  for (Index k = 0; k < n; ++k) out(k) = cplx(x(k), x(n + k));
  return out;
}

Vector evolve_reallinear(const Matrix& h, const RealLinearOp& h2,
                         const Vector& psi0, double t, double tol) {
  require_square(h, "evolve_reallinear");
  require_same_dim(h.rows(), h2.dim(), "evolve_reallinear");
  require_same_dim(h.rows(), psi0.size(), "evolve_reallinear");
  if (!is_self_adjoint(h, tol)) {
    throw ContractError("evolve_reallinear: H is not self-adjoint");
  }
  const auto generator =
      compose(RealLinearOp::scalar(h.rows(), -kI), RealLinearOp::linear(h) + h2);
  const RealMatrix flow = (realify(generator) * t).exp();
  return derealify(flow * realify(psi0));
}

Matrix inject_term_C_unchecked(const SystemCBundle& bundle,
                               const RealLinearOp& h2_a) {
  require_same_dim(bundle.u.space().base_dim(), h2_a.dim(), "inject_term_C");
  const auto transformed = transform_op(bundle.u, lift_operator(h2_a));
  return -kI * bundle.j_matrix * transformed.linear_part();
}

Matrix inject_term_C(const SystemCBundle& bundle, const RealLinearOp& h2_a,
                     double tol) {
  const auto check = validate_antilinear_condition(h2_a, tol);
  if (!check.satisfied) {
    throw ConditionViolation("inject_term_C: (iH2)† ≠ −iH2 (violation " +
                             std::to_string(check.max_violation) + ")");
  }
  require_same_dim(bundle.u.space().base_dim(), h2_a.dim(), "inject_term_C");
  const auto transformed = transform_op(bundle.u, lift_operator(h2_a));
  if (!transformed.is_linear(tol)) {
    throw ContractError("inject_term_C: transformed term is not linear");
  }
  return -kI * bundle.j_matrix * transformed.linear_part();
}

Matrix build_time_reversal_C(const SystemCBundle& bundle, const RealLinearOp& t_a,
                             double tol) {
  const Index n = bundle.u.space().base_dim();
  require_same_dim(n, t_a.dim(), "build_time_reversal_C");
  if (!t_a.is_antilinear(tol)) {
    throw ContractError("build_time_reversal_C: T^A must be antilinear");
  }
  if (max_deviation(compose(adjoint(t_a), t_a), RealLinearOp::identity(n)) >= tol) {
    throw ContractError("build_time_reversal_C: T^A is not antiunitary");
  }
  // H^B = U (U H^B U⁻¹) U⁻¹.
  const auto h_b = transform_op(bundle.u, RealLinearOp::linear(bundle.energy_observable_c));
  const auto t_b = lift_operator(t_a);
  if (max_abs(commutator(t_b, h_b)) >= tol) {
    throw ContractError("build_time_reversal_C: T^A does not commute with H^A");
  }
  const auto t_c = transform_op(bundle.u, t_b);
  if (!t_c.is_linear(tol)) {
    throw ContractError("build_time_reversal_C: transformed T is not linear");
  }
  return t_c.linear_part();
}

GeneratorCheck check_generator_condition(const RealLinearOp& g, double epsilon,
                                         double tol) {
  const auto condition = validate_antilinear_condition(g, tol);
  const Index n = g.dim();
  const auto step =
      RealLinearOp::identity(n) + epsilon * compose(RealLinearOp::scalar(n, kI), g);
  const double residual =
      max_deviation(compose(adjoint(step), step), RealLinearOp::identity(n));
  return {condition.satisfied, condition.max_violation, residual};
}

} // namespace antiham
