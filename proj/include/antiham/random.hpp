#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "antiham/reallinear.hpp"
#include "antiham/system.hpp"

namespace antiham {

/// Seeded source of Gaussian matrices and vectors. Everything drawn from one
/// Rng is a deterministic function of its seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  std::uint64_t next_seed() { return engine_(); }

  /// Standard complex Gaussian, E|z|² = 1.
  cplx complex_normal();

  Vector vector(Index n);
  Vector unit_vector(Index n);
  Matrix matrix(Index rows, Index cols);
  RealMatrix real_matrix(Index rows, Index cols);

  /// (G + G†)/2.
  Matrix hermitian(Index n);
  /// Real symmetric (G + Gᵀ)/2.
  Matrix real_symmetric(Index n);
  /// Haar-like unitary from the QR decomposition of a complex Gaussian.
  Matrix unitary(Index n);
  /// Hermitian matrix whose lowest eigenvalue is repeated (when n ≥ 2).
  Matrix degenerate_hermitian(Index n);

  RealLinearOp reallinear(Index n);
  /// Complex antisymmetric matrix Aᵀ = −A.
  Matrix antisymmetric(Index n);
  /// Complex symmetric matrix Aᵀ = A.
  Matrix symmetric(Index n);

private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Stateless 64-bit mixer (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

/// Per-trial seed derived from (master_seed, suite_name, trial_index) only,
/// so suites and trials can run in any order.
std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view suite,
                         std::uint64_t trial_index);

/// Hermitian Hamiltonian (G + G†)/2 and two random Hermitian observables.
QuantumSystem gen_random_system_A(Index dim, std::uint64_t seed);

/// Same, but Hamiltonian and observables each have a repeated eigenvalue.
QuantumSystem gen_degenerate_system_A(Index dim, std::uint64_t seed);

/// WW†/Tr(WW†) for a complex Gaussian W.
DensityMatrix gen_random_density(Index dim, std::uint64_t seed);

/// Random density matrix with a repeated eigenvalue (when dim ≥ 2).
DensityMatrix gen_degenerate_density(Index dim, std::uint64_t seed);

} // namespace antiham
