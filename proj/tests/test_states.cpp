#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "squint/canonical.hpp"
#include "squint/errors.hpp"
#include "squint/states.hpp"
#include "squint/uncertainty.hpp"

using namespace squint;

TEST_CASE("coherent state covariance and determinant") {
  const GaussianState one = coherent_state(1, Vector::Zero(2));
  CHECK(max_abs(one.cov() - 0.5 * Matrix::Identity(2, 2)) == 0.0);

  const GaussianState three = coherent_state(3, Vector::Zero(6));
  CHECK(three.cov().determinant() == doctest::Approx(1.0 / 64.0).epsilon(1e-12));
  CHECK(std::abs(robertson_margin(three)) < 1e-12);
}

TEST_CASE("fock state second moments") {
  const GaussianState vac = fock_state({0});
  CHECK(max_abs(vac.cov() - coherent_state(1, Vector::Zero(2)).cov()) == 0.0);
  CHECK(max_abs(vac.mean()) == 0.0);

  const GaussianState two = fock_state({1, 2});
  Vector expected(4);
  expected << 1.5, 2.5, 1.5, 2.5;
  CHECK(max_abs(two.cov().diagonal() - expected) == 0.0);
  CHECK(two.cov().determinant() == doctest::Approx(1.5 * 1.5 * 2.5 * 2.5).epsilon(1e-12));

  const Vector nu = symplectic_eigenvalues(fock_state({1}).cov());
  CHECK(nu(0) == doctest::Approx(1.5).epsilon(1e-12));

  CHECK_THROWS_AS(fock_state({-1}), ArgumentError);
}

TEST_CASE("identity transport leaves a state untouched") {
  const GaussianState s = fock_state({2});
  const GaussianState moved = apply_ct(s, SymplecticMatrix::identity(1));
  CHECK(max_abs(moved.cov() - s.cov()) == 0.0);
  CHECK(max_abs(moved.mean() - s.mean()) == 0.0);
}

TEST_CASE("squeezing the vacuum matches the number-basis oracle") {
  const double r = 0.5;
  Vector rv(1);
  rv << r;
  const GaussianState squeezed = apply_ct(coherent_state(1, Vector::Zero(2)), squeeze_ct(rv));
  const oracles::ModeVariances ref = oracles::squeezed_vacuum_variances(r);
  CHECK(squeezed.cov()(0, 0) == doctest::Approx(ref.dp2).epsilon(1e-9));
  CHECK(squeezed.cov()(1, 1) == doctest::Approx(ref.dq2).epsilon(1e-9));
  CHECK(squeezed.cov().determinant() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("per-block-proportional covariances commute with orthogonal rotations") {
  // rotation blocks are orthogonal exactly when m w = 1
  const GaussianState s = fock_state({1});
  for (double t : {0.3, 1.0, 2.4}) {
    Vector m(1), w(1);
    m << 2.0;
    w << 0.5;
    const GaussianState moved = apply_ct(s, rotation_ct(m, w, t));
    CHECK(max_abs(moved.cov() - s.cov()) < 1e-15);
  }
}

TEST_CASE("transport preserves the symplectic spectrum and determinant") {
  const GaussianState s = random_valid_state(2, 42, Purity::Mixed);
  const SymplecticMatrix l = random_symplectic(2, 43);
  const GaussianState moved = apply_ct(s, l);

  const Vector nu0 = symplectic_eigenvalues(s.cov());
  const Vector nu1 = symplectic_eigenvalues(moved.cov());
  CHECK(max_abs(nu1 - nu0) < 1e-8);
  CHECK(moved.cov().determinant() ==
        doctest::Approx(s.cov().determinant()).epsilon(1e-8));
}

TEST_CASE("transport refuses a non-symplectic carrier") {
  // the constructor itself rejects a blatantly non-symplectic matrix
  CHECK_THROWS_AS(SymplecticMatrix(1.5 * Matrix::Identity(2, 2)), ArgumentError);
}

TEST_CASE("random valid states: determinism and purity classes") {
  const GaussianState a = random_valid_state(2, 9001, Purity::Pure);
  const GaussianState b = random_valid_state(2, 9001, Purity::Pure);
  CHECK(max_abs(a.cov() - b.cov()) == 0.0);  // bit-identical

  const double floor2 = std::pow(0.25, 2);
  CHECK(std::abs(a.cov().determinant() - floor2) <= 1e-9 * floor2);

  const GaussianState m = random_valid_state(2, 9001, Purity::Mixed);
  CHECK(m.cov().determinant() > floor2);
}

TEST_CASE("random valid states always validate") {
  for (int modes = 1; modes <= 3; ++modes) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Purity p = seed % 2 ? Purity::Mixed : Purity::Pure;
      const GaussianState s = random_valid_state(modes, derive_stream_seed(500, seed), p);
      const StateValidation v = validate_state(s.mean(), s.cov());
      CHECK(v.valid);
      CHECK(s.cov().determinant() >= std::pow(0.25, modes) - 1e-9);
    }
  }
}

TEST_CASE("validation verdicts") {
  const StateValidation ok = validate_state(Vector::Zero(2), 0.5 * Matrix::Identity(2, 2));
  CHECK(ok.valid);
  CHECK(ok.state.has_value());

  // too small in both quadratures: det = 0.01 < 1/4
  const StateValidation tiny = validate_state(Vector::Zero(2), 0.1 * Matrix::Identity(2, 2));
  CHECK_FALSE(tiny.valid);
  CHECK(tiny.min_robertson_eigenvalue < -1e-9);

  const StateValidation mixed = validate_state(Vector::Zero(2), Matrix::Identity(2, 2));
  CHECK(mixed.valid);
  CHECK(symplectic_eigenvalues(mixed.state->cov())(0) == doctest::Approx(1.0));

  Matrix asym(2, 2);
  asym << 0.5, 0.1, -0.1, 0.5;
  CHECK_FALSE(validate_state(Vector::Zero(2), asym).valid);

  CHECK_THROWS_AS(validate_state(Vector::Zero(3), Matrix::Identity(3, 3)), ArgumentError);
}

TEST_CASE("constructor enforces the same invariants") {
  CHECK_THROWS_AS(GaussianState(Vector::Zero(2), 0.1 * Matrix::Identity(2, 2)), ValidationError);
  CHECK_NOTHROW(GaussianState(Vector::Zero(2), Matrix::Identity(2, 2)));
}

TEST_CASE("stream seeds differ across indices and reproduce") {
  CHECK(derive_stream_seed(7, 0) != derive_stream_seed(7, 1));
  CHECK(derive_stream_seed(7, 3) == derive_stream_seed(7, 3));
  CHECK(derive_stream_seed(7, 0) != derive_stream_seed(8, 0));
}
