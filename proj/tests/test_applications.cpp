#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "antiham/applications.hpp"
#include "antiham/errors.hpp"
#include "antiham/random.hpp"

using namespace antiham;

namespace {

double dev(const Matrix& a, const Matrix& b) { return max_abs(Matrix(a - b)); }
double dev(const Vector& a, const Vector& b) { return max_abs(Vector(a - b)); }

Matrix mat2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

SystemCBundle bundle_for(const Matrix& h) {
  const auto sys_b = build_system_B(QuantumSystem::make(SystemLabel::A, h, {}));
  return build_system_C(sys_b, DoubledSpace(h.rows()));
}

} // namespace

TEST_CASE("validate_antilinear_condition") {
  const auto ok = validate_antilinear_condition(RealLinearOp::antilinear(mat2(0, 1, -1, 0)));
  CHECK(ok.satisfied);
  CHECK(ok.max_violation == 0.0);
  const auto bad = validate_antilinear_condition(RealLinearOp::antilinear(Matrix::Identity(2, 2)));
  CHECK_FALSE(bad.satisfied);
  CHECK(bad.max_violation == doctest::Approx(2.0));
  CHECK(validate_antilinear_condition(RealLinearOp::zero(3)).satisfied);

  // Hermitian linear terms are admissible too.
  Rng rng(51);
  CHECK(validate_antilinear_condition(RealLinearOp::linear(rng.hermitian(3))).satisfied);
  CHECK_FALSE(validate_antilinear_condition(RealLinearOp::linear(rng.matrix(3, 3))).satisfied);
}

TEST_CASE("realify") {
  const Index n = 3;
  const RealMatrix id = RealMatrix::Identity(n, n);
  RealMatrix i_block = RealMatrix::Zero(2 * n, 2 * n);
  i_block.topRightCorner(n, n) = -id;
  i_block.bottomLeftCorner(n, n) = id;
  CHECK((realify(RealLinearOp::scalar(n, kI)) - i_block).cwiseAbs().maxCoeff() == 0.0);

  RealMatrix k_block = RealMatrix::Zero(2 * n, 2 * n);
  k_block.topLeftCorner(n, n) = id;
  k_block.bottomRightCorner(n, n) = -id;
  CHECK((realify(RealLinearOp::conjugation(n)) - k_block).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(52);
  const auto m = rng.reallinear(n);
  const auto nn = rng.reallinear(n);
  const Vector v = rng.vector(n);
  CHECK(dev(derealify(realify(m) * realify(v)), antiham::apply(m, v)) < 1e-12);
  CHECK((realify(compose(m, nn)) - realify(m) * realify(nn)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(dev(derealify(realify(v)), v) == 0.0);
  CHECK_THROWS_AS(derealify(RealVector::Zero(3)), ShapeError);
}

TEST_CASE("evolve_reallinear") {
  Rng rng(53);
  const auto sys = gen_random_system_A(4, rng.next_seed());
  const Vector psi = rng.unit_vector(4);
  CHECK(dev(evolve_reallinear(sys.hamiltonian, RealLinearOp::zero(4), psi, 0.9),
            evolve_state(sys, psi, 0.9)) < 1e-10);
  CHECK(dev(evolve_reallinear(sys.hamiltonian, rng.reallinear(4), psi, 0.0), psi) < 1e-15);

  const auto admissible = RealLinearOp::antilinear(rng.antisymmetric(4));
  CHECK(std::abs(evolve_reallinear(sys.hamiltonian, admissible, psi, 1.3).norm() - 1.0) < 1e-10);
  const auto inadmissible = RealLinearOp::antilinear(rng.symmetric(4));
  CHECK(std::abs(evolve_reallinear(sys.hamiltonian, inadmissible, psi, 1.3).norm() - 1.0) >
        1e-6);

  CHECK_THROWS_AS(evolve_reallinear(rng.matrix(4, 4), admissible, psi, 1.0), ContractError);
  CHECK_THROWS_AS(evolve_reallinear(sys.hamiltonian, admissible, Vector::Zero(3), 1.0),
                  ShapeError);
}

TEST_CASE("inject_term_C") {
  Rng rng(54);
  const Matrix h = rng.hermitian(2);
  const auto bundle = bundle_for(h);
  CHECK(max_abs(inject_term_C(bundle, RealLinearOp::zero(2))) == 0.0);

  const double c = 0.8;
  const auto h2 = RealLinearOp::antilinear(mat2(0, c, -c, 0));
  const Matrix h2_c = inject_term_C(bundle, h2);
  // Real A lifts to a real matrix commuting with ij, K and L, and UKU⁻¹ = L,
  // so H^C₂ = −ij lift(A) L: i times a real antisymmetric matrix.
  const DoubledSpace& space = bundle.u.space();
  const Matrix expected = -kI * space.j() * lift_operator(mat2(0, c, -c, 0)) * space.l();
  CHECK(dev(h2_c, expected) < 1e-15);
  CHECK(h2_c.real().cwiseAbs().maxCoeff() < 1e-15);
  CHECK(hermiticity_violation(h2_c) < 1e-15);
  CHECK(max_abs(h2_c) == doctest::Approx(c));

  const Matrix total = bundle.hamiltonian_c + h2_c;
  CHECK(hermiticity_violation(total) < 1e-12);
  const Vector psi0 = rng.unit_vector(2);
  for (const double t : {0.5, 1.0}) {
    const Vector reference = evolve_reallinear(h, h2, psi0, t);
    const Vector via_c = propagator(total, t) * map_state_C(bundle.u, lift_pure(psi0));
    CHECK(dev(map_state_C(bundle.u, lift_pure(reference)), via_c) < 1e-9);
  }

  const auto bad = RealLinearOp::antilinear(mat2(1, 0, 0, 1));
  CHECK_THROWS_AS(inject_term_C(bundle, bad), ConditionViolation);
  CHECK(hermiticity_violation(inject_term_C_unchecked(bundle, bad)) > 0.5);
}

TEST_CASE("build_time_reversal_C") {
  // U K U⁻¹ = L, so T^C = L whenever T^A = K.
  const auto single = bundle_for(Matrix::Constant(1, 1, 0.9));
  const Matrix t1 = build_time_reversal_C(single, RealLinearOp::conjugation(1));
  CHECK(dev(t1, mat2(1, 0, 0, -1)) < 1e-15);
  CHECK(dev(Matrix(t1.adjoint() * t1), Matrix::Identity(2, 2)) < 1e-15);

  Rng rng(55);
  const auto bundle = bundle_for(rng.real_symmetric(4));
  const Matrix t_c = build_time_reversal_C(bundle, RealLinearOp::conjugation(4));
  CHECK(dev(t_c, bundle.u.space().l()) < 1e-15);
  CHECK(dev(Matrix(t_c.adjoint() * t_c), Matrix::Identity(8, 8)) < 1e-10);
  CHECK(max_abs(anticommutator(t_c, bundle.hamiltonian_c)) < 1e-10);
  CHECK(max_abs(commutator(t_c, bundle.energy_observable_c)) < 1e-10);

  const Vector psi = map_state_C(bundle.u, lift_pure(rng.unit_vector(4)));
  for (const double t : {0.3, 1.0, 2.5}) {
    const Vector forward = t_c * evolve_state(bundle.system, psi, t);
    const Vector reversed = propagator(bundle.hamiltonian_c, -t) * (t_c * psi);
    CHECK(dev(forward, reversed) < 1e-9);
  }

  CHECK_THROWS_AS(build_time_reversal_C(bundle, RealLinearOp::identity(4)), ContractError);
  CHECK_THROWS_AS(build_time_reversal_C(bundle, 2.0 * RealLinearOp::conjugation(4)),
                  ContractError);
  const auto complex_bundle = bundle_for(rng.hermitian(4));
  CHECK_THROWS_AS(build_time_reversal_C(complex_bundle, RealLinearOp::conjugation(4)),
                  ContractError);
}

TEST_CASE("check_generator_condition") {
  Rng rng(56);
  const auto hermitian = check_generator_condition(RealLinearOp::linear(rng.hermitian(3)), 1e-3);
  CHECK(hermitian.satisfied);

  const auto anti = check_generator_condition(RealLinearOp::antilinear(rng.antisymmetric(3)), 1e-3);
  CHECK(anti.satisfied);
  CHECK(anti.first_order_residual < 1e-5);

  const auto sym = check_generator_condition(RealLinearOp::antilinear(rng.symmetric(3)), 1e-3);
  CHECK_FALSE(sym.satisfied);
  CHECK(sym.first_order_residual > 1e-4);
}
