#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "antiham/doubling.hpp"
#include "antiham/errors.hpp"
#include "antiham/random.hpp"

using namespace antiham;

namespace {

double dev(const Matrix& a, const Matrix& b) { return max_abs(Matrix(a - b)); }

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

} // namespace

TEST_CASE("V, j and L") {
  for (Index n = 1; n <= 4; ++n) {
    const DoubledSpace s(n);
    const Matrix& v = s.v();
    const Matrix vd = s.v_dagger();
    const Matrix id = Matrix::Identity(2 * n, 2 * n);
    CHECK(max_abs(Matrix(v * v)) == 0.0);
    CHECK(max_abs(Matrix(vd * vd)) == 0.0);
    CHECK(dev(v * vd + vd * v, id) == 0.0);
    CHECK(dev(v * vd * v, v) == 0.0);
    CHECK(dev(s.j(), vd - v) == 0.0);
    CHECK(dev(s.l(), v * vd - vd * v) == 0.0);
    CHECK(dev(s.j() * s.j(), -id) == 0.0);
    CHECK(dev(s.l() * s.l(), id) == 0.0);
    CHECK(dev(s.j() * s.l(), -s.l() * s.j()) == 0.0);
  }
  // V(Ψ, Φ) = (Φ, 0).
  const DoubledSpace s(1);
  Matrix expected(2, 2);
  expected << 0, 1, 0, 0;
  CHECK(dev(s.v(), expected) == 0.0);
  CHECK_THROWS_AS(DoubledSpace(0), ContractError);
}

TEST_CASE("lift_operator") {
  CHECK(dev(lift_operator(Matrix(Matrix::Identity(3, 3))), Matrix::Identity(6, 6)) == 0.0);
  const Matrix e = Matrix::Constant(1, 1, 2.5);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = expected(1, 1) = 2.5;
  CHECK(dev(lift_operator(e), expected) == 0.0);

  Rng rng(31);
  const Matrix m = rng.matrix(3, 3);
  const Matrix n = rng.matrix(3, 3);
  const Matrix mn = m * n;
  CHECK(dev(lift_operator(Matrix(m * n)), block_diag(mn, mn)) < 1e-15);
  CHECK(dev(lift_operator(m) * lift_operator(n), lift_operator(Matrix(m * n))) < 1e-14);

  const auto rl = rng.reallinear(3);
  const auto lifted = lift_operator(rl);
  CHECK(dev(lifted.linear_part(), block_diag(rl.linear_part(), rl.linear_part())) == 0.0);
  CHECK(dev(lifted.antilinear_part(), block_diag(rl.antilinear_part(), rl.antilinear_part())) ==
        0.0);
}

TEST_CASE("lift_density and lift_pure") {
  const auto one = DensityMatrix(Matrix::Identity(1, 1));
  CHECK(dev(lift_density(one).matrix(), 0.5 * Matrix::Identity(2, 2)) == 0.0);

  Rng rng(32);
  const auto rho = gen_random_density(4, rng.next_seed());
  const auto lifted = lift_density(rho);
  CHECK(std::abs(lifted.matrix().trace() - 1.0) < 1e-14);
  for (Index k = 0; k < 4; ++k) {
    CHECK(std::abs(lifted.probabilities()(2 * k) - 0.5 * rho.probabilities()(k)) < 1e-13);
    CHECK(std::abs(lifted.probabilities()(2 * k + 1) - 0.5 * rho.probabilities()(k)) < 1e-13);
  }

  Vector one_vec = Vector::Ones(1);
  Vector expected(2);
  expected << 1.0, 0.0;
  CHECK(max_abs(Vector(lift_pure(one_vec) - expected)) == 0.0);
  const Vector psi = rng.vector(3);
  CHECK(std::abs(lift_pure(psi).norm() - psi.norm()) < 1e-15);

  const DoubledSpace space(3);
  const Vector p1 = lift_pure(psi / psi.norm());
  const Vector p2 = space.v_dagger() * p1;
  const auto sym = symmetrize_density(DensityMatrix::pure(p1), space);
  CHECK(dev(sym.matrix(), 0.5 * p1 * p1.adjoint() + 0.5 * p2 * p2.adjoint()) < 1e-14);
}

TEST_CASE("check_lift_constraint") {
  const DoubledSpace space(2);
  Rng rng(33);
  const auto lifted = lift_operator(rng.reallinear(2));
  const auto ok = check_lift_constraint(lifted, space);
  CHECK(ok.satisfied);
  CHECK(ok.max_violation < 1e-15);

  // [V, V] = 0 but [V†, V] = −L.
  const auto v = check_lift_constraint(RealLinearOp::linear(space.v()), space);
  CHECK_FALSE(v.satisfied);
  CHECK(v.max_violation == doctest::Approx(1.0));

  // [V, j] = [V, V†] = L, so j is not a lifted operator.
  const Matrix vj = space.v() * space.j() - space.j() * space.v();
  CHECK(dev(vj, space.l()) == 0.0);
  const auto j = check_lift_constraint(RealLinearOp::linear(space.j()), space);
  CHECK_FALSE(j.satisfied);
  CHECK(j.max_violation == doctest::Approx(1.0));

  // Conjugation is componentwise, so it commutes with the real V.
  CHECK(check_lift_constraint(RealLinearOp::conjugation(4), space).satisfied);
}

TEST_CASE("unlift") {
  const DoubledSpace space(3);
  Rng rng(34);
  const auto m = rng.reallinear(3);
  CHECK(max_deviation(unlift(lift_operator(m), space), m) == 0.0);
  CHECK(dev(unlift(Matrix(Matrix::Identity(6, 6)), space), Matrix::Identity(3, 3)) == 0.0);
  CHECK_THROWS_AS(unlift(RealLinearOp::linear(space.j()), space), NotLiftableError);

  // (M^A Ψ, 0) = VV† M^B (Ψ, 0).
  const Matrix h = rng.matrix(3, 3);
  const Vector psi = rng.vector(3);
  const Vector projected = space.v() * space.v_dagger() * lift_operator(h) * lift_pure(psi);
  CHECK(max_abs(Vector(projected - lift_pure(Vector(h * psi)))) < 1e-14);

  const auto rho1 = gen_random_density(6, rng.next_seed());
  const auto rho2 = symmetrize_density(rho1, space);
  const DensityMatrix rho_a(2.0 * unlift(rho2.matrix(), space));
  CHECK(dev(lift_density(rho_a).matrix(), rho2.matrix()) < 1e-14);
}

TEST_CASE("symmetrize_density") {
  const DoubledSpace one(1);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  CHECK(dev(symmetrize_density(DensityMatrix(d), one).matrix(), 0.5 * Matrix::Identity(2, 2)) <
        1e-15);

  const DoubledSpace space(3);
  Rng rng(35);
  const auto lifted = lift_density(gen_random_density(3, rng.next_seed()));
  CHECK(dev(symmetrize_density(lifted, space).matrix(), lifted.matrix()) < 1e-14);

  const auto rho1 = gen_random_density(6, rng.next_seed());
  const auto rho2 = symmetrize_density(rho1, space);
  CHECK(std::abs(rho2.matrix().trace() - 1.0) < 1e-11);
  CHECK(check_lift_constraint(rho2.matrix(), space).satisfied);
  CHECK(rho2.probabilities().minCoeff() > -1e-12);

  const Matrix s = space.v_dagger() + space.v();
  const Matrix id = Matrix::Identity(6, 6);
  for (const Matrix& f : {Matrix(id), Matrix(space.j()), s, Matrix(s * space.j())}) {
    CHECK(dev(f.adjoint() * f, id) < 1e-15);
  }
}

TEST_CASE("build_system_B") {
  const auto scalar = QuantumSystem::make(SystemLabel::A, Matrix::Constant(1, 1, -0.8), {});
  const auto b1 = build_system_B(scalar);
  CHECK(b1.label == SystemLabel::B);
  CHECK(dev(b1.hamiltonian, -0.8 * Matrix::Identity(2, 2)) == 0.0);
  CHECK(ground_degeneracy(b1) == 2);

  Rng rng(36);
  const auto sys_a = gen_random_system_A(3, rng.next_seed());
  const auto sys_b = build_system_B(sys_a);
  CHECK(dev(sys_b.hamiltonian, sys_b.energy_observable) == 0.0);
  for (std::size_t k = 0; k < sys_a.observables.size(); ++k) {
    const auto sa = spectral_decompose(sys_a.observables[k]);
    const auto sb = spectral_decompose(sys_b.observables[k]);
    REQUIRE(sa.size() == sb.size());
    for (std::size_t n = 0; n < sa.size(); ++n) {
      CHECK(std::abs(sa.eigenvalues[n] - sb.eigenvalues[n]) < 1e-12);
      CHECK(sb.rank(n) == 2 * sa.rank(n));
    }
  }

  // Both (Θ, 0) and (0, Θ) are vacua.
  const DoubledSpace space(3);
  const Vector g1 = *sys_b.ground_state;
  const Vector g2 = space.v_dagger() * g1;
  const double e0 = spectral_decompose(sys_a.hamiltonian).eigenvalues.front();
  CHECK(max_abs(Vector(sys_b.hamiltonian * g1 - e0 * g1)) < 1e-12);
  CHECK(max_abs(Vector(sys_b.hamiltonian * g2 - e0 * g2)) < 1e-12);
  CHECK(ground_degeneracy(sys_b) == 2);

  CHECK_THROWS_AS(build_system_B(sys_b), ContractError);
}

TEST_CASE("A and B give the same predictions") {
  Rng rng(37);
  const auto sys_a = gen_degenerate_system_A(4, rng.next_seed());
  const auto sys_b = build_system_B(sys_a);
  const auto rho_a = gen_random_density(4, rng.next_seed());
  const auto rho_b = lift_density(rho_a);
  const auto pa = measure_probabilities(rho_a, spectral_decompose(sys_a.observables[0]));
  const auto pb = measure_probabilities(rho_b, spectral_decompose(sys_b.observables[0]));
  REQUIRE(pa.size() == pb.size());
  for (std::size_t k = 0; k < pa.size(); ++k) {
    CHECK(std::abs(pa[k].probability - pb[k].probability) < 1e-10);
  }
  for (const double t : {0.3, 1.0, 2.5}) {
    CHECK(dev(lift_density(evolve_density(sys_a, rho_a, t)).matrix(),
              evolve_density(sys_b, rho_b, t).matrix()) < 1e-9);
  }
}
