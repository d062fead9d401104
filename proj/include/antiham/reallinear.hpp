#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "antiham/errors.hpp"

namespace antiham {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Absolute tolerance used by every check unless the caller passes another.
inline constexpr double kDefaultTolerance = 1e-9;

inline constexpr cplx kI{0.0, 1.0};

// Dense helpers shared by all modules.

/// Largest entry modulus (entrywise infinity norm). Zero for empty matrices.
double max_abs(const Matrix& m);
double max_abs(const Vector& v);

void require_finite(const Matrix& m, std::string_view what);
void require_square(const Matrix& m, std::string_view what);
void require_same_dim(Index a, Index b, std::string_view what);

/// ‖M − M†‖∞ for a square matrix.
double hermiticity_violation(const Matrix& m);
bool is_self_adjoint(const Matrix& m, double tol = kDefaultTolerance);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

/// A real-linear operator Ψ ↦ BΨ + A·conj(Ψ), stored as the pair (B, A).
///
/// The pair is the unique split into a linear part B and an antilinear part
/// A, so the decomposition is the data model. Both parts are square with the
/// same dimension and finite entries.
class RealLinearOp {
public:
  RealLinearOp(Matrix linear_part, Matrix antilinear_part);

  static RealLinearOp linear(Matrix b);
  static RealLinearOp antilinear(Matrix a);
  static RealLinearOp zero(Index dim);
  static RealLinearOp identity(Index dim);
  /// Multiplication by the complex number alpha.
  static RealLinearOp scalar(Index dim, cplx alpha);
  /// Componentwise complex conjugation K in the computational basis.
  static RealLinearOp conjugation(Index dim);

  Index dim() const { return linear_.rows(); }
  const Matrix& linear_part() const { return linear_; }
  const Matrix& antilinear_part() const { return antilinear_; }

  bool is_linear(double tol = kDefaultTolerance) const;
  bool is_antilinear(double tol = kDefaultTolerance) const;

  RealLinearOp operator-() const;
  RealLinearOp& operator+=(const RealLinearOp& other);
  RealLinearOp& operator-=(const RealLinearOp& other);
  /// Real scalars commute with every real-linear operator.
  RealLinearOp& operator*=(double a);

private:
  Matrix linear_;
  Matrix antilinear_;
};

RealLinearOp operator+(RealLinearOp lhs, const RealLinearOp& rhs);
RealLinearOp operator-(RealLinearOp lhs, const RealLinearOp& rhs);
RealLinearOp operator*(double a, RealLinearOp op);
/// Composition m∘n.
RealLinearOp operator*(const RealLinearOp& m, const RealLinearOp& n);

struct LinearAntilinearSplit {
  RealLinearOp linear;
  RealLinearOp antilinear;
};

Vector apply(const RealLinearOp& op, const Vector& v);

LinearAntilinearSplit split(const RealLinearOp& op);

/// m∘n. Parts: B = BmBn + Am·conj(An), A = BmAn + Am·conj(Bn).
RealLinearOp compose(const RealLinearOp& m, const RealLinearOp& n);

/// (B, A) ↦ (B†, Aᵀ). Satisfies Re⟨M†Ψ, Φ⟩ = Re⟨Ψ, MΦ⟩.
RealLinearOp adjoint(const RealLinearOp& op);

/// Trace of the linear part; the only basis-independent trace of a
/// real-linear operator.
cplx real_trace(const RealLinearOp& op);

/// m∘n − n∘m.
RealLinearOp commutator(const RealLinearOp& m, const RealLinearOp& n);
RealLinearOp anticommutator(const RealLinearOp& m, const RealLinearOp& n);

/// Max entrywise difference over both parts.
double max_deviation(const RealLinearOp& a, const RealLinearOp& b);
double max_abs(const RealLinearOp& op);

/// Re⟨u, v⟩ with the inner product antilinear in the first slot.
double real_inner(const Vector& u, const Vector& v);

/// Re⟨u, v⟩ − i·Re⟨u, i·v⟩, which equals ⟨u, v⟩.
cplx reconstruct_inner(const Vector& u, const Vector& v);

/// ⟨NΨ, Φ⟩ evaluated as Re Ψ†N†Φ − i·Re Ψ†N†(iΦ), using only the adjoint of
/// N and real parts of inner products.
cplx vector_adjoint_apply(const RealLinearOp& n, const Vector& psi,
                          const Vector& phi);

} // namespace antiham
