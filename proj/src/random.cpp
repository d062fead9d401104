#include "antiham/random.hpp"

#include <cmath>

namespace antiham {

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) / std::sqrt(2.0);
}

Vector Rng::vector(Index n) {
  Vector v(n);
  for (Index k = 0; k < n; ++k) v(k) = complex_normal();
  return v;
}

Vector Rng::unit_vector(Index n) {
  Vector v = vector(n);
  return v / v.norm();
}

Matrix Rng::matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_normal();
  }
  return m;
}

RealMatrix Rng::real_matrix(Index rows, Index cols) {
  RealMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = normal();
  }
  return m;
}

Matrix Rng::hermitian(Index n) {
  const Matrix g = matrix(n, n);
  return 0.5 * (g + g.adjoint());
}

Matrix Rng::real_symmetric(Index n) {
  const RealMatrix g = real_matrix(n, n);
  return (0.5 * (g + g.transpose())).cast<cplx>();
}

Matrix Rng::unitary(Index n) {
  const Eigen::HouseholderQR<Matrix> qr(matrix(n, n));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

Matrix Rng::degenerate_hermitian(Index n) {
  RealVector values(n);
  for (Index k = 0; k < n; ++k) values(k) = normal();
  if (n >= 2) {
    Index lowest = 0;
    values.minCoeff(&lowest);
    values((lowest + 1) % n) = values(lowest);
  }
  const Matrix q = unitary(n);
  const Matrix m = q * values.cast<cplx>().asDiagonal() * q.adjoint();
  return 0.5 * (m + m.adjoint());
}

RealLinearOp Rng::reallinear(Index n) {
  Matrix b = matrix(n, n);
  Matrix a = matrix(n, n);
  return {std::move(b), std::move(a)};
}

Matrix Rng::antisymmetric(Index n) {
  const Matrix g = matrix(n, n);
  return 0.5 * (g - g.transpose());
}

Matrix Rng::symmetric(Index n) {
  const Matrix g = matrix(n, n);
  return 0.5 * (g + g.transpose());
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view suite,
                         std::uint64_t trial_index) {
  // FNV-1a over the suite name.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : suite) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(master_seed ^ h) + trial_index);
}

QuantumSystem gen_random_system_A(Index dim, std::uint64_t seed) {
  if (dim < 1) throw ContractError("gen_random_system_A: dim must be >= 1");
  Rng rng(seed);
  Matrix h = rng.hermitian(dim);
  std::vector<Matrix> observables{rng.hermitian(dim), rng.hermitian(dim)};
  return QuantumSystem::make(SystemLabel::A, std::move(h), std::move(observables));
}

QuantumSystem gen_degenerate_system_A(Index dim, std::uint64_t seed) {
  if (dim < 1) throw ContractError("gen_degenerate_system_A: dim must be >= 1");
  Rng rng(seed);
  Matrix h = rng.degenerate_hermitian(dim);
  std::vector<Matrix> observables{rng.degenerate_hermitian(dim),
                                  rng.degenerate_hermitian(dim)};
  return QuantumSystem::make(SystemLabel::A, std::move(h), std::move(observables));
}

DensityMatrix gen_random_density(Index dim, std::uint64_t seed) {
  if (dim < 1) throw ContractError("gen_random_density: dim must be >= 1");
  Rng rng(seed);
  const Matrix w = rng.matrix(dim, dim);
  const Matrix gram = w * w.adjoint();
  return DensityMatrix(gram / gram.trace().real());
}

DensityMatrix gen_degenerate_density(Index dim, std::uint64_t seed) {
  if (dim < 1) throw ContractError("gen_degenerate_density: dim must be >= 1");
  Rng rng(seed);
  RealVector p(dim);
  for (Index k = 0; k < dim; ++k) p(k) = rng.uniform(0.1, 1.0);
  if (dim >= 2) p(1) = p(0);
  p /= p.sum();
  return DensityMatrix::from_ensemble(p, rng.unitary(dim));
}

} // namespace antiham
