#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "antiham/errors.hpp"
#include "antiham/random.hpp"
#include "antiham/reallinear.hpp"

using namespace antiham;

namespace {

Vector vec(std::initializer_list<cplx> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index k = 0;
  for (const cplx x : xs) v(k++) = x;
  return v;
}

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

} // namespace

TEST_CASE("apply: conjugation, identity and a mixed operator") {
  const auto k = RealLinearOp::conjugation(2);
  CHECK(max_abs(Vector(antiham::apply(k, vec({{1, 2}, 3})) - vec({{1, -2}, 3}))) == 0.0);

  const Vector v = vec({{0.3, -1}, {2, 0.5}});
  CHECK(max_abs(Vector(antiham::apply(RealLinearOp::identity(2), v) - v)) == 0.0);

  const RealLinearOp m(mat2(0, 1, 1, 0), Matrix::Identity(2, 2));
  const Vector out = antiham::apply(m, vec({kI, 0.0}));
  // Componentwise: row 0 = 0·i + 1·0 + conj(i), row 1 = 1·i + 0 + conj(0).
  CHECK(max_abs(Vector(out - vec({-kI, kI}))) == 0.0);

  CHECK_THROWS_AS(antiham::apply(m, Vector::Zero(3)), ShapeError);
}

TEST_CASE("construction rejects malformed parts") {
  CHECK_THROWS_AS(RealLinearOp(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), ShapeError);
  CHECK_THROWS_AS(RealLinearOp(Matrix::Zero(2, 2), Matrix::Zero(3, 3)), ShapeError);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS(RealLinearOp::linear(bad));
}

TEST_CASE("split") {
  const auto k = RealLinearOp::conjugation(3);
  const auto sk = split(k);
  CHECK(max_abs(sk.linear) == 0.0);
  CHECK(max_deviation(sk.antilinear, k) == 0.0);

  const auto i_op = RealLinearOp::scalar(3, kI);
  const auto si = split(i_op);
  CHECK(max_deviation(si.linear, i_op) == 0.0);
  CHECK(max_abs(si.antilinear) == 0.0);

  // I + K: ½(M − iMi) and ½(M + iMi) on basis vectors give I and K.
  const auto m = RealLinearOp::identity(2) + RealLinearOp::conjugation(2);
  const auto sm = split(m);
  for (Index c = 0; c < 2; ++c) {
    Vector e = Vector::Zero(2);
    e(c) = 1.0;
    const Vector me = antiham::apply(m, e);
    const Vector mie = antiham::apply(m, Vector(kI * e));
    CHECK(max_abs(Vector(sm.linear.linear_part().col(c) - 0.5 * (me - kI * mie))) < 1e-15);
    CHECK(max_abs(Vector(sm.antilinear.antilinear_part().col(c) - 0.5 * (me + kI * mie))) <
          1e-15);
  }
  CHECK(max_deviation(sm.linear, RealLinearOp::identity(2)) == 0.0);
  CHECK(max_deviation(sm.antilinear, RealLinearOp::conjugation(2)) == 0.0);
}

TEST_CASE("compose") {
  const auto k = RealLinearOp::conjugation(2);
  CHECK(max_deviation(compose(k, k), RealLinearOp::identity(2)) == 0.0);

  const auto i_op = RealLinearOp::scalar(2, kI);
  const auto ik = compose(i_op, k);
  const auto ki = compose(k, i_op);
  CHECK(max_abs(ik.linear_part()) == 0.0);
  CHECK(max_abs(Matrix(ik.antilinear_part() - kI * Matrix::Identity(2, 2))) == 0.0);
  CHECK(max_abs(Matrix(ki.antilinear_part() + kI * Matrix::Identity(2, 2))) == 0.0);
  CHECK(max_deviation(ik, -ki) == 0.0);

  Rng rng(7);
  const auto m = rng.reallinear(4);
  const auto n = rng.reallinear(4);
  const auto mn = compose(m, n);
  for (int t = 0; t < 20; ++t) {
    const Vector v = rng.vector(4);
    CHECK(max_abs(Vector(antiham::apply(mn, v) -
                         antiham::apply(m, antiham::apply(n, v)))) < 1e-13);
  }
  CHECK_THROWS_AS(compose(m, rng.reallinear(3)), ShapeError);
}

TEST_CASE("adjoint") {
  const auto k = RealLinearOp::conjugation(3);
  CHECK(max_deviation(adjoint(k), k) == 0.0);

  Rng rng(11);
  const auto m = rng.reallinear(5);
  CHECK(max_deviation(adjoint(adjoint(m)), m) == 0.0);

  const auto a = RealLinearOp::antilinear(mat2(0, 1, 0, 0));
  const auto a_dag = adjoint(a);
  CHECK(max_abs(a_dag.linear_part()) == 0.0);
  CHECK(max_abs(Matrix(a_dag.antilinear_part() - mat2(0, 0, 1, 0))) == 0.0);
  for (int t = 0; t < 10; ++t) {
    const Vector psi = rng.vector(2);
    const Vector phi = rng.vector(2);
    CHECK(std::abs(real_inner(antiham::apply(a_dag, psi), phi) -
                   real_inner(psi, antiham::apply(a, phi))) < 1e-14);
    CHECK(std::abs(antiham::apply(a_dag, psi).dot(phi) -
                   std::conj(psi.dot(antiham::apply(a, phi)))) < 1e-14);
  }
}

TEST_CASE("adjoint contract on random operators") {
  Rng rng(12);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto m = rng.reallinear(4);
    const Vector psi = rng.vector(4);
    const Vector phi = rng.vector(4);
    worst = std::max(worst, std::abs(real_inner(antiham::apply(adjoint(m), psi), phi) -
                                     real_inner(psi, antiham::apply(m, phi))));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("real_trace") {
  CHECK(real_trace(RealLinearOp::conjugation(4)) == cplx(0.0, 0.0));
  CHECK(real_trace(RealLinearOp::scalar(5, kI)) == cplx(0.0, 5.0));

  Rng rng(13);
  const auto m = rng.reallinear(6);
  const auto n = rng.reallinear(6);
  CHECK(std::abs(real_trace(compose(m, n)).real() - real_trace(compose(n, m)).real()) < 1e-12);
  CHECK(std::abs(real_trace(m + n) - real_trace(m) - real_trace(n)) < 1e-12);
}

TEST_CASE("real_inner and reconstruct_inner") {
  const Vector u = vec({1.0, kI}) / std::sqrt(2.0);
  CHECK(real_inner(u, u) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(reconstruct_inner(u, u) - 1.0) < 1e-15);

  const Vector e = vec({1.0, 0.0});
  const Vector ie = vec({kI, 0.0});
  CHECK(real_inner(e, ie) == 0.0);
  CHECK(reconstruct_inner(e, ie) == kI);

  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    const Vector a = rng.vector(5);
    const Vector b = rng.vector(5);
    CHECK(std::abs(reconstruct_inner(a, b) - a.dot(b)) < 1e-12);
  }
  CHECK_THROWS_AS(real_inner(Vector::Zero(3), e), ShapeError);
}

TEST_CASE("vector_adjoint_apply") {
  Rng rng(15);
  const Vector psi = rng.vector(3);
  const Vector phi = rng.vector(3);
  CHECK(std::abs(vector_adjoint_apply(RealLinearOp::identity(3), psi, phi) - psi.dot(phi)) <
        1e-14);

  // ⟨K(i, 0), (1, 0)⟩ = ⟨(−i, 0), (1, 0)⟩ = i.
  CHECK(std::abs(vector_adjoint_apply(RealLinearOp::conjugation(2), vec({kI, 0.0}),
                                      vec({1.0, 0.0})) -
                 kI) < 1e-15);

  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto n = RealLinearOp::antilinear(rng.matrix(4, 4));
    const Vector a = rng.vector(4);
    const Vector b = rng.vector(4);
    worst = std::max(worst, std::abs(vector_adjoint_apply(n, a, b) - antiham::apply(n, a).dot(b)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("matrix helpers") {
  const Matrix y = mat2(0, -kI, kI, 0);
  CHECK(is_self_adjoint(y));
  CHECK_FALSE(is_self_adjoint(mat2(0, 1, 0, 0)));
  CHECK(hermiticity_violation(mat2(0, 1, 0, 0)) == 1.0);
  CHECK(max_abs(anticommutator(y, mat2(1, 0, 0, -1))) == 0.0);
  CHECK(max_abs(Matrix(commutator(y, mat2(0, 1, 1, 0)) - mat2(-2.0 * kI, 0, 0, 2.0 * kI))) ==
        0.0);
}
