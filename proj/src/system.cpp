#include "antiham/system.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace antiham {

std::string_view to_string(SystemLabel label) {
  switch (label) {
  case SystemLabel::A:
    return "A";
  case SystemLabel::B:
    return "B";
  case SystemLabel::C:
    return "C";
  }
  return "?";
}

SystemLabel parse_label(std::string_view text) {
  if (text == "A") return SystemLabel::A;
  if (text == "B") return SystemLabel::B;
  if (text == "C") return SystemLabel::C;
  throw ContractError("unknown system label '" + std::string(text) + "'");
}

namespace {

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Eigen::SelfAdjointEigenSolver<Matrix> eigensolve(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(hermitian));
  if (solver.info() != Eigen::Success) {
    throw ContractError("eigensolver did not converge");
  }
  return solver;
}

// [begin, end) ranges of eigenvalues whose consecutive gaps are <= tol.
std::vector<std::pair<Index, Index>> cluster_ranges(const RealVector& values,
                                                    double tol) {
  std::vector<std::pair<Index, Index>> ranges;
  Index begin = 0;
  for (Index k = 1; k <= values.size(); ++k) {
    if (k == values.size() || values(k) - values(k - 1) > tol) {
      ranges.emplace_back(begin, k);
      begin = k;
    }
  }
  return ranges;
}

} // namespace

Index SpectralDecomposition::rank(std::size_t n) const {
  const auto& p = projectors.at(n);
  return static_cast<Index>(std::llround(p.trace().real()));
}

Matrix SpectralDecomposition::reconstruct() const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (std::size_t n = 0; n < size(); ++n) {
    out += eigenvalues[n] * projectors[n];
  }
  return out;
}

double default_cluster_tolerance(const Matrix& o) {
  const double norm = o.size() == 0 ? 0.0 : o.cwiseAbs().rowwise().sum().maxCoeff();
  return 1e-8 * (1.0 + norm);
}

SpectralDecomposition spectral_decompose(const Matrix& o, double cluster_tol,
                                         double tol) {
  require_square(o, "spectral_decompose");
  require_finite(o, "spectral_decompose");
  const double violation = hermiticity_violation(o);
  if (violation >= tol) {
    throw ContractError("spectral_decompose: operator is not self-adjoint (violation " +
                        std::to_string(violation) + ")");
  }
  const auto solver = eigensolve(o);
  const RealVector& values = solver.eigenvalues();
  const Matrix& vectors = solver.eigenvectors();

  SpectralDecomposition out;
  for (const auto& [begin, end] : cluster_ranges(values, cluster_tol)) {
    const Matrix block = vectors.middleCols(begin, end - begin);
    out.eigenvalues.push_back(values.segment(begin, end - begin).mean());
    out.projectors.push_back(block * block.adjoint());
  }
  return out;
}

SpectralDecomposition spectral_decompose(const Matrix& o) {
  return spectral_decompose(o, default_cluster_tolerance(o));
}

Index canonical_phase(Vector& v) {
  if (v.size() == 0) return 0;
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return 0;
  Index pivot = 0;
  // First entry within rounding of the maximum, so exact ties resolve to the
  // lowest index regardless of last-bit noise.
  while (std::abs(v(pivot)) < largest * (1.0 - 1e-8)) ++pivot;
  const cplx entry = v(pivot);
  v *= std::conj(entry) / std::abs(entry);
  v(pivot) = std::abs(entry);
  return pivot;
}

CanonicalEigen canonical_eigen(const Matrix& hermitian, double cluster_tol) {
  require_square(hermitian, "canonical_eigen");
  if (cluster_tol < 0.0) cluster_tol = default_cluster_tolerance(hermitian);
  const auto solver = eigensolve(hermitian);
  CanonicalEigen out{solver.eigenvalues(), solver.eigenvectors()};

  const Index n = out.values.size();
  std::vector<Index> pivots(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    Vector col = out.vectors.col(k);
    pivots[static_cast<std::size_t>(k)] = canonical_phase(col);
    out.vectors.col(k) = col;
  }

  for (const auto& [begin, end] : cluster_ranges(out.values, cluster_tol)) {
    if (end - begin < 2) continue;
    std::vector<Index> order(static_cast<std::size_t>(end - begin));
    std::iota(order.begin(), order.end(), begin);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      return pivots[static_cast<std::size_t>(a)] < pivots[static_cast<std::size_t>(b)];
    });
    const Matrix block = out.vectors.middleCols(begin, end - begin);
    const RealVector vals = out.values.segment(begin, end - begin);
    for (Index k = 0; k < end - begin; ++k) {
      out.vectors.col(begin + k) = block.col(order[static_cast<std::size_t>(k)] - begin);
      out.values(begin + k) = vals(order[static_cast<std::size_t>(k)] - begin);
    }
  }
  return out;
}

DensityMatrix::DensityMatrix(const Matrix& m, double tol) {
  require_square(m, "DensityMatrix");
  require_finite(m, "DensityMatrix");
  const double violation = hermiticity_violation(m);
  if (violation >= tol) {
    throw ContractError("DensityMatrix: not self-adjoint (violation " +
                        std::to_string(violation) + ")");
  }
  matrix_ = hermitian_part(m);
  const cplx tr = matrix_.trace();
  if (std::abs(tr - 1.0) >= tol) {
    throw ContractError("DensityMatrix: trace " + std::to_string(tr.real()) +
                        " differs from 1");
  }
  eigen_ = canonical_eigen(matrix_);
  if (eigen_.values.size() > 0 && eigen_.values.minCoeff() < -tol) {
    throw ContractError("DensityMatrix: negative eigenvalue " +
                        std::to_string(eigen_.values.minCoeff()));
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi, double tol) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw ContractError("DensityMatrix::pure: zero vector");
  const Vector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint(), tol);
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::from_ensemble(const RealVector& probabilities,
                                           const Matrix& states, double tol) {
  require_same_dim(probabilities.size(), states.cols(), "from_ensemble");
  Matrix m = Matrix::Zero(states.rows(), states.rows());
  for (Index k = 0; k < states.cols(); ++k) {
    m += probabilities(k) * states.col(k) * states.col(k).adjoint();
  }
  return DensityMatrix(m, tol);
}

std::vector<OutcomeProbability>
measure_probabilities(const DensityMatrix& rho,
                      const SpectralDecomposition& spec) {
  require_same_dim(rho.dim(), spec.dim(), "measure_probabilities");
  std::vector<OutcomeProbability> out;
  out.reserve(spec.size());
  for (std::size_t n = 0; n < spec.size(); ++n) {
    const cplx p = (rho.matrix() * spec.projectors[n]).trace();
    out.push_back({spec.eigenvalues[n], p.real()});
  }
  return out;
}

std::vector<MeasurementOutcome> measure(const DensityMatrix& rho,
                                        const SpectralDecomposition& spec,
                                        double floor) {
  std::vector<MeasurementOutcome> out;
  const auto probs = measure_probabilities(rho, spec);
  for (std::size_t n = 0; n < probs.size(); ++n) {
    MeasurementOutcome outcome{probs[n].eigenvalue, probs[n].probability, std::nullopt};
    if (probs[n].probability > floor) {
      outcome.post_state = collapse(rho, spec.projectors[n], floor);
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

DensityMatrix collapse(const DensityMatrix& rho, const Matrix& projector,
                       double floor) {
  require_square(projector, "collapse");
  require_same_dim(rho.dim(), projector.rows(), "collapse");
  const double p = (rho.matrix() * projector).trace().real();
  if (!(p > floor)) {
    throw ZeroProbabilityError("collapse: outcome probability " + std::to_string(p) +
                               " is below the floor");
  }
  return DensityMatrix(projector * rho.matrix() * projector / p);
}

double expectation(const DensityMatrix& rho, const Matrix& o, double tol) {
  require_square(o, "expectation");
  require_same_dim(rho.dim(), o.rows(), "expectation");
  if (hermiticity_violation(o) >= tol) {
    throw ContractError("expectation: observable is not self-adjoint");
  }
  return (rho.matrix() * o).trace().real();
}

Matrix propagator(const Matrix& hamiltonian, double t) {
  require_square(hamiltonian, "propagator");
  const auto solver = eigensolve(hamiltonian);
  const Matrix& v = solver.eigenvectors();
  Vector phases(v.cols());
  for (Index k = 0; k < v.cols(); ++k) {
    phases(k) = std::exp(-kI * (solver.eigenvalues()(k) * t));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

QuantumSystem QuantumSystem::make(SystemLabel label, Matrix hamiltonian,
                                  Matrix energy_observable,
                                  std::vector<Matrix> observables,
                                  std::optional<Vector> ground_state, double tol) {
  QuantumSystem sys;
  sys.label = label;
  sys.hamiltonian = std::move(hamiltonian);
  sys.energy_observable = std::move(energy_observable);
  sys.observables = std::move(observables);
  sys.ground_state = std::move(ground_state);
  sys.validate(tol);
  if (!sys.ground_state) {
    sys.ground_state = canonical_eigen(sys.energy_observable).vectors.col(0);
  }
  return sys;
}

QuantumSystem QuantumSystem::make(SystemLabel label, Matrix hamiltonian,
                                  std::vector<Matrix> observables, double tol) {
  Matrix energy = hamiltonian;
  return make(label, std::move(hamiltonian), std::move(energy),
              std::move(observables), std::nullopt, tol);
}

void QuantumSystem::validate(double tol) const {
  require_square(hamiltonian, "QuantumSystem hamiltonian");
  require_finite(hamiltonian, "QuantumSystem hamiltonian");
  require_square(energy_observable, "QuantumSystem energy_observable");
  require_finite(energy_observable, "QuantumSystem energy_observable");
  require_same_dim(hamiltonian.rows(), energy_observable.rows(),
                   "QuantumSystem energy_observable");
  if (dim() < 1) throw ContractError("QuantumSystem: empty Hilbert space");
  if (!is_self_adjoint(hamiltonian, tol)) {
    throw ContractError("QuantumSystem: hamiltonian is not self-adjoint");
  }
  if (!is_self_adjoint(energy_observable, tol)) {
    throw ContractError("QuantumSystem: energy observable is not self-adjoint");
  }
  if (label != SystemLabel::C &&
      max_abs(Matrix(hamiltonian - energy_observable)) >= tol) {
    throw ContractError("QuantumSystem: energy observable must equal the "
                        "hamiltonian for systems A and B");
  }
  for (const auto& o : observables) {
    require_square(o, "QuantumSystem observable");
    require_finite(o, "QuantumSystem observable");
    require_same_dim(dim(), o.rows(), "QuantumSystem observable");
    if (!is_self_adjoint(o, tol)) {
      throw ContractError("QuantumSystem: observable is not self-adjoint");
    }
  }
  if (ground_state) require_same_dim(dim(), ground_state->size(), "QuantumSystem ground_state");
}

Index ground_degeneracy(const QuantumSystem& sys) {
  return spectral_decompose(sys.energy_observable).rank(0);
}

Vector evolve_state(const QuantumSystem& sys, const Vector& psi, double t) {
  require_same_dim(sys.dim(), psi.size(), "evolve_state");
  return propagator(sys.hamiltonian, t) * psi;
}

DensityMatrix evolve_density(const QuantumSystem& sys, const DensityMatrix& rho,
                             double t) {
  require_same_dim(sys.dim(), rho.dim(), "evolve_density");
  const Matrix u = propagator(sys.hamiltonian, t);
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

} // namespace antiham
