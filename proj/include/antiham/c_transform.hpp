#pragma once

#include "antiham/doubling.hpp"
#include "antiham/reallinear.hpp"
#include "antiham/system.hpp"

namespace antiham {

/// The real-linear involution U = ½(1 − ij + KL + ijKL) on a doubled space.
///
/// Linear part ½(1 − ij), antilinear part ½(1 + ij)L. U is its own inverse
/// and its own adjoint, and conjugation by U exchanges i ↔ j and K ↔ L.
class UTransform {
public:
  explicit UTransform(DoubledSpace space);

  const DoubledSpace& space() const { return space_; }
  const RealLinearOp& op() const { return u_; }
  Index dim() const { return space_.total_dim(); }

private:
  DoubledSpace space_;
  RealLinearOp u_;
};

UTransform build_U(const DoubledSpace& space);

/// U M U⁻¹ (with U⁻¹ = U).
RealLinearOp transform_op(const UTransform& u, const RealLinearOp& m);

/// (1−ij)/2·M + (1+ij)/2·KL M KL; agrees with transform_op when M commutes
/// with ij.
RealLinearOp transform_op_commuting(const UTransform& u, const RealLinearOp& m);

/// O^C = U O^B U⁻¹ for a lifted self-adjoint O^B. Equal to Re O^B + j·Im O^B.
/// Throws ContractError when O^B is not self-adjoint or not lifted.
Matrix build_observable_C(const UTransform& u, const Matrix& o_b,
                          double tol = kDefaultTolerance);

/// System C together with the pieces that relate it to system B.
struct SystemCBundle {
  QuantumSystem system; // label C; hamiltonian = H^C, energy = U H^B U⁻¹
  Matrix hamiltonian_c;
  Matrix energy_observable_c;
  Matrix j_matrix;
  UTransform u;

  /// −ij, the grading that separates H^C from the energy observable.
  Matrix grading() const;
};

/// H^C = −ij·(U H^B U⁻¹); observables are transformed one by one.
SystemCBundle build_system_C(const QuantumSystem& sys_b, const DoubledSpace& space,
                             double tol = kDefaultTolerance);

/// Ψ^C = UΨ^B.
Vector map_state_C(const UTransform& u, const Vector& psi_b);

/// Σ pₙ (UΨₙ)(UΨₙ)† over the given ensemble. The vectors are used as given,
/// so the result depends on their phases.
DensityMatrix map_ensemble_C(const UTransform& u, const RealVector& probabilities,
                             const Matrix& states);

/// map_ensemble_C over the canonical eigendecomposition of ρ^B. This is not
/// U ρ^B U†.
DensityMatrix map_density_C(const UTransform& u, const DensityMatrix& rho_b);

/// The real-linear ρ_R with ρ_R Φ = Σ pₙ Ψₙ Re(Ψₙ†Φ), so that ρ = ρ_R − iρ_R i.
RealLinearOp real_part_density(const RealVector& probabilities,
                               const Matrix& states);

/// ρ^C as Uρ_R U† − i·Uρ_R U†·i, from the canonical eigendecomposition.
/// Second route to map_density_C.
Matrix map_density_C_via_real_part(const UTransform& u,
                                   const DensityMatrix& rho_b);

} // namespace antiham
