#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "antiham/reallinear.hpp"

namespace antiham {

enum class SystemLabel { A, B, C };

std::string_view to_string(SystemLabel label);
SystemLabel parse_label(std::string_view text);

/// Clustered spectrum of a self-adjoint matrix: ascending distinct
/// eigenvalues, each with the orthogonal projector onto its eigenspace.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Matrix> projectors;

  std::size_t size() const { return eigenvalues.size(); }
  Index dim() const { return projectors.empty() ? 0 : projectors.front().rows(); }
  Index rank(std::size_t n) const;
  Matrix reconstruct() const;
};

/// 1e-8·(1 + ‖O‖), with ‖·‖ the induced infinity norm (max row sum), an
/// upper bound on the spectral radius.
double default_cluster_tolerance(const Matrix& o);

/// Throws ContractError when o is not self-adjoint within tol.
SpectralDecomposition spectral_decompose(const Matrix& o, double cluster_tol,
                                         double tol = kDefaultTolerance);
SpectralDecomposition spectral_decompose(const Matrix& o);

/// Eigenpairs of a self-adjoint matrix with a deterministic gauge: each
/// eigenvector's first component of largest modulus is real positive, and
/// vectors inside a degenerate cluster are ordered by the index of that
/// component. Eigenvalues ascend.
struct CanonicalEigen {
  RealVector values;
  Matrix vectors; // columns
};

CanonicalEigen canonical_eigen(const Matrix& hermitian,
                               double cluster_tol = -1.0);

/// Rotate the global phase of v so its first largest-modulus entry is real
/// positive. Returns the index of that entry.
Index canonical_phase(Vector& v);

/// Positive semidefinite, self-adjoint, unit trace. The canonical
/// eigendecomposition is computed once at construction.
class DensityMatrix {
public:
  explicit DensityMatrix(const Matrix& m, double tol = kDefaultTolerance);

  static DensityMatrix pure(const Vector& psi, double tol = kDefaultTolerance);
  static DensityMatrix maximally_mixed(Index dim);
  /// Σ pₙ ψₙψₙ† for the given weights and (orthonormal) columns.
  static DensityMatrix from_ensemble(const RealVector& probabilities,
                                     const Matrix& states,
                                     double tol = kDefaultTolerance);

  Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const RealVector& probabilities() const { return eigen_.values; }
  const Matrix& eigenvectors() const { return eigen_.vectors; }

private:
  Matrix matrix_;
  CanonicalEigen eigen_;
};

struct OutcomeProbability {
  double eigenvalue;
  double probability;
};

struct MeasurementOutcome {
  double eigenvalue;
  double probability;
  /// Empty when the outcome probability is below the collapse floor.
  std::optional<DensityMatrix> post_state;
};

inline constexpr double kCollapseFloor = 1e-12;

/// pₙ = Tr(ρEₙ) for each clustered eigenvalue.
std::vector<OutcomeProbability>
measure_probabilities(const DensityMatrix& rho,
                      const SpectralDecomposition& spec);

/// Probabilities together with the post-measurement states.
std::vector<MeasurementOutcome> measure(const DensityMatrix& rho,
                                        const SpectralDecomposition& spec,
                                        double floor = kCollapseFloor);

/// EₙρEₙ / Tr(ρEₙ). Throws ZeroProbabilityError when the trace is at or
/// below floor.
DensityMatrix collapse(const DensityMatrix& rho, const Matrix& projector,
                       double floor = kCollapseFloor);

/// Tr(ρO) for self-adjoint O.
double expectation(const DensityMatrix& rho, const Matrix& o,
                   double tol = kDefaultTolerance);

/// exp(−iHt) for self-adjoint H, via its eigendecomposition.
Matrix propagator(const Matrix& hamiltonian, double t);

struct QuantumSystem {
  SystemLabel label = SystemLabel::A;
  Matrix hamiltonian;
  Matrix energy_observable;
  std::vector<Matrix> observables;
  /// Lowest-eigenvalue eigenvector of energy_observable (the vacuum).
  std::optional<Vector> ground_state;

  Index dim() const { return hamiltonian.rows(); }

  /// Validates every invariant; the ground state is computed when absent.
  static QuantumSystem make(SystemLabel label, Matrix hamiltonian,
                            Matrix energy_observable,
                            std::vector<Matrix> observables,
                            std::optional<Vector> ground_state = std::nullopt,
                            double tol = kDefaultTolerance);

  /// Convenience for systems A and B where energy and Hamiltonian coincide.
  static QuantumSystem make(SystemLabel label, Matrix hamiltonian,
                            std::vector<Matrix> observables,
                            double tol = kDefaultTolerance);

  void validate(double tol = kDefaultTolerance) const;
};

/// Rank of the lowest-energy eigenspace of the energy observable.
Index ground_degeneracy(const QuantumSystem& sys);

Vector evolve_state(const QuantumSystem& sys, const Vector& psi, double t);
DensityMatrix evolve_density(const QuantumSystem& sys, const DensityMatrix& rho,
                             double t);

} // namespace antiham
