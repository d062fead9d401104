#pragma once

#include "antiham/c_transform.hpp"
#include "antiham/reallinear.hpp"

namespace antiham {

struct ConditionCheck {
  bool satisfied;
  double max_violation;
};

/// Whether (i·h2)† = −i·h2 holds. Purely antilinear h2 satisfies it exactly
/// when its matrix is complex antisymmetric.
ConditionCheck validate_antilinear_condition(const RealLinearOp& h2,
                                             double tol = kDefaultTolerance);

/// Real 2n×2n matrix of a real-linear operator acting on (Re Ψ; Im Ψ).
RealMatrix realify(const RealLinearOp& m);
RealVector realify(const Vector& v);
Vector derealify(const RealVector& x);

/// Solves dΨ/dt = −i(H + H₂)Ψ through the real matrix exponential of the
/// realified generator.
Vector evolve_reallinear(const Matrix& h, const RealLinearOp& h2,
                         const Vector& psi0, double t,
                         double tol = kDefaultTolerance);

/// H^C₂ = −ij·U lift(H₂) U⁻¹, the linear self-adjoint counterpart of an
/// admissible real-linear term. Throws ConditionViolation otherwise.
Matrix inject_term_C(const SystemCBundle& bundle, const RealLinearOp& h2_a,
                     double tol = kDefaultTolerance);

/// Same construction without the admissibility gate; used to show that an
/// inadmissible term yields a non-self-adjoint H^C₂.
Matrix inject_term_C_unchecked(const SystemCBundle& bundle,
                               const RealLinearOp& h2_a);

/// T^C = U lift(T^A) U⁻¹ for an antiunitary T^A commuting with H^A.
/// The result is linear and unitary, commutes with the energy observable and
/// anticommutes with H^C.
Matrix build_time_reversal_C(const SystemCBundle& bundle, const RealLinearOp& t_a,
                             double tol = kDefaultTolerance);

struct GeneratorCheck {
  bool satisfied;
  double max_violation;
  /// ‖(1 + iεG)†(1 + iεG) − 1‖∞; O(ε²) when the condition holds.
  double first_order_residual;
};

GeneratorCheck check_generator_condition(const RealLinearOp& g, double epsilon,
                                         double tol = kDefaultTolerance);

} // namespace antiham
