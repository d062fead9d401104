#pragma once

#include "antiham/reallinear.hpp"
#include "antiham/system.hpp"

namespace antiham {

/// The direct sum H ⊕ H of an n-dimensional space with itself. Indices
/// 0..n-1 are the first summand, n..2n-1 the second.
///
///   V(Ψ, Φ) = (Φ, 0)     V†(Ψ, Φ) = (0, Ψ)
///   j = V† − V           L = VV† − V†V
class DoubledSpace {
public:
  explicit DoubledSpace(Index base_dim);

  Index base_dim() const { return base_dim_; }
  Index total_dim() const { return 2 * base_dim_; }

  const Matrix& v() const { return v_; }
  Matrix v_dagger() const { return v_.adjoint(); }
  const Matrix& j() const { return j_; }
  const Matrix& l() const { return l_; }

private:
  Index base_dim_;
  Matrix v_;
  Matrix j_;
  Matrix l_;
};

/// Block-diagonal duplication, M(Ψ, Φ) = (MΨ, MΦ).
Matrix lift_operator(const Matrix& m);
RealLinearOp lift_operator(const RealLinearOp& m);

/// ½·blockdiag(ρ, ρ).
DensityMatrix lift_density(const DensityMatrix& rho);

/// (Ψ, 0).
Vector lift_pure(const Vector& psi);

struct ConstraintCheck {
  bool satisfied;
  double max_violation;
};

/// Whether m commutes with V and V† (hence with j).
ConstraintCheck check_lift_constraint(const RealLinearOp& m,
                                      const DoubledSpace& space,
                                      double tol = kDefaultTolerance);
ConstraintCheck check_lift_constraint(const Matrix& m, const DoubledSpace& space,
                                      double tol = kDefaultTolerance);

/// Recovers the base operator of a lifted one from its top-left block.
/// Throws NotLiftableError when the constraint is violated.
RealLinearOp unlift(const RealLinearOp& m, const DoubledSpace& space,
                    double tol = kDefaultTolerance);
Matrix unlift(const Matrix& m, const DoubledSpace& space,
              double tol = kDefaultTolerance);

/// ¼ Σ_{a,b∈{0,1}} Sᵃ jᵇ ρ j⁻ᵇ S⁻ᵃ with S = V† + V. The result commutes with
/// V and V† and is observationally indistinguishable from ρ.
DensityMatrix symmetrize_density(const DensityMatrix& rho,
                                 const DoubledSpace& space);

/// Lifts Hamiltonian and observables of a system A. The ground state stored
/// is (Θ, 0); its degenerate partner is V†(Θ, 0) = (0, Θ).
QuantumSystem build_system_B(const QuantumSystem& sys_a);

} // namespace antiham
