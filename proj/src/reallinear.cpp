#include "antiham/reallinear.hpp"

#include <string>

namespace antiham {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

void require_finite(const Matrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw ContractError(std::string(what) + ": non-finite entry");
  }
}

void require_square(const Matrix& m, std::string_view what) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(what) + ": expected square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_dim(Index a, Index b, std::string_view what) {
  if (a != b) {
    throw ShapeError(std::string(what) + ": dimension mismatch (" +
                     std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

double hermiticity_violation(const Matrix& m) {
  require_square(m, "hermiticity_violation");
  return max_abs(Matrix(m - m.adjoint()));
}

bool is_self_adjoint(const Matrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_violation(m) < tol;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  return a * b + b * a;
}

RealLinearOp::RealLinearOp(Matrix linear_part, Matrix antilinear_part)
    : linear_(std::move(linear_part)), antilinear_(std::move(antilinear_part)) {
  require_square(linear_, "RealLinearOp linear part");
  require_square(antilinear_, "RealLinearOp antilinear part");
  require_same_dim(linear_.rows(), antilinear_.rows(), "RealLinearOp parts");
  require_finite(linear_, "RealLinearOp linear part");
  require_finite(antilinear_, "RealLinearOp antilinear part");
}

RealLinearOp RealLinearOp::linear(Matrix b) {
  const Index n = b.rows();
  return {std::move(b), Matrix::Zero(n, n)};
}

RealLinearOp RealLinearOp::antilinear(Matrix a) {
  const Index n = a.rows();
  return {Matrix::Zero(n, n), std::move(a)};
}

RealLinearOp RealLinearOp::zero(Index dim) {
  return {Matrix::Zero(dim, dim), Matrix::Zero(dim, dim)};
}

RealLinearOp RealLinearOp::identity(Index dim) {
  return linear(Matrix::Identity(dim, dim));
}

RealLinearOp RealLinearOp::scalar(Index dim, cplx alpha) {
  return linear(alpha * Matrix::Identity(dim, dim));
}

RealLinearOp RealLinearOp::conjugation(Index dim) {
  return antilinear(Matrix::Identity(dim, dim));
}

bool RealLinearOp::is_linear(double tol) const {
  return max_abs(antilinear_) < tol;
}

bool RealLinearOp::is_antilinear(double tol) const {
  return max_abs(linear_) < tol;
}

RealLinearOp RealLinearOp::operator-() const { return {-linear_, -antilinear_}; }

RealLinearOp& RealLinearOp::operator+=(const RealLinearOp& other) {
  require_same_dim(dim(), other.dim(), "RealLinearOp +");
  linear_ += other.linear_;
  antilinear_ += other.antilinear_;
  return *this;
}

RealLinearOp& RealLinearOp::operator-=(const RealLinearOp& other) {
  require_same_dim(dim(), other.dim(), "RealLinearOp -");
  linear_ -= other.linear_;
  antilinear_ -= other.antilinear_;
  return *this;
}

RealLinearOp& RealLinearOp::operator*=(double a) {
  linear_ *= a;
  antilinear_ *= a;
  return *this;
}

RealLinearOp operator+(RealLinearOp lhs, const RealLinearOp& rhs) {
  lhs += rhs;
  return lhs;
}

RealLinearOp operator-(RealLinearOp lhs, const RealLinearOp& rhs) {
  lhs -= rhs;
  return lhs;
}

RealLinearOp operator*(double a, RealLinearOp op) {
  op *= a;
  return op;
}

RealLinearOp operator*(const RealLinearOp& m, const RealLinearOp& n) {
  return compose(m, n);
}

Vector apply(const RealLinearOp& op, const Vector& v) {
  require_same_dim(op.dim(), v.size(), "apply");
  return op.linear_part() * v + op.antilinear_part() * v.conjugate();
}

LinearAntilinearSplit split(const RealLinearOp& op) {
  return {RealLinearOp::linear(op.linear_part()),
          RealLinearOp::antilinear(op.antilinear_part())};
}

RealLinearOp compose(const RealLinearOp& m, const RealLinearOp& n) {
  require_same_dim(m.dim(), n.dim(), "compose");
  const Matrix& bm = m.linear_part();
  const Matrix& am = m.antilinear_part();
  const Matrix& bn = n.linear_part();
  const Matrix& an = n.antilinear_part();
  return {bm * bn + am * an.conjugate(), bm * an + am * bn.conjugate()};
}

RealLinearOp adjoint(const RealLinearOp& op) {
  return {op.linear_part().adjoint(), op.antilinear_part().transpose()};
}

cplx real_trace(const RealLinearOp& op) { return op.linear_part().trace(); }

RealLinearOp commutator(const RealLinearOp& m, const RealLinearOp& n) {
  return compose(m, n) - compose(n, m);
}

RealLinearOp anticommutator(const RealLinearOp& m, const RealLinearOp& n) {
  return compose(m, n) + compose(n, m);
}

double max_deviation(const RealLinearOp& a, const RealLinearOp& b) {
  require_same_dim(a.dim(), b.dim(), "max_deviation");
  return std::max(max_abs(Matrix(a.linear_part() - b.linear_part())),
                  max_abs(Matrix(a.antilinear_part() - b.antilinear_part())));
}

double max_abs(const RealLinearOp& op) {
  return std::max(max_abs(op.linear_part()), max_abs(op.antilinear_part()));
}

double real_inner(const Vector& u, const Vector& v) {
  require_same_dim(u.size(), v.size(), "real_inner");
  return u.dot(v).real();
}

cplx reconstruct_inner(const Vector& u, const Vector& v) {
  require_same_dim(u.size(), v.size(), "reconstruct_inner");
  return real_inner(u, v) - kI * real_inner(u, Vector(kI * v));
}

cplx vector_adjoint_apply(const RealLinearOp& n, const Vector& psi,
                          const Vector& phi) {
  require_same_dim(n.dim(), psi.size(), "vector_adjoint_apply");
  require_same_dim(n.dim(), phi.size(), "vector_adjoint_apply");
  const RealLinearOp n_dag = adjoint(n);
  const double re = real_inner(psi, antiham::apply(n_dag, phi));
  const double re_i = real_inner(psi, antiham::apply(n_dag, Vector(kI * phi)));
  return re - kI * re_i;
}

} // namespace antiham
