#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "squint/canonical.hpp"
#include "squint/errors.hpp"
#include "squint/states.hpp"
#include "squint/uncertainty.hpp"

using namespace squint;

namespace {

GaussianState squeezed_coherent(int modes, std::uint64_t seed) {
  return apply_ct(coherent_state(modes, Vector::Zero(2 * modes)), random_symplectic(modes, seed));
}

GaussianState squeezed_fock(const std::vector<int>& n, std::uint64_t seed) {
  return apply_ct(fock_state(n), random_symplectic(static_cast<int>(n.size()), seed));
}

}  // namespace

TEST_CASE("commutator matrix") {
  const Matrix c = commutator_matrix(1);
  Matrix expected(2, 2);
  expected << 0.0, -0.5, 0.5, 0.0;
  CHECK(max_abs(c - expected) == 0.0);
  CHECK(c.determinant() == doctest::Approx(0.25));
  CHECK(max_abs(c + c.transpose()) == 0.0);
  CHECK(commutator_matrix(3).determinant() == doctest::Approx(std::pow(0.25, 3)).epsilon(1e-12));
}

TEST_CASE("odd-order characteristic coefficients of the commutator matrix vanish") {
  for (int n : {1, 2, 3}) {
    const Vector coeffs = characteristic_coefficients(commutator_matrix(n));
    for (int r = 1; r <= 2 * n; r += 2) {
      CHECK(std::abs(coeffs(r - 1)) < 1e-12);
    }
  }
}

TEST_CASE("robertson margin values") {
  CHECK(robertson_margin(coherent_state(2, Vector::Zero(4))) == doctest::Approx(0.0).epsilon(1e-12));

  const double expected = 1.5 * 1.5 * 2.5 * 2.5 - 1.0 / 16.0;
  CHECK(robertson_margin(fock_state({1, 2})) == doctest::Approx(expected).epsilon(1e-12));

  CHECK(robertson_margin(random_valid_state(2, 5, Purity::Mixed)) > 0.0);
}

TEST_CASE("schrodinger margin values") {
  CHECK(schrodinger_margin(coherent_state(1, Vector::Zero(2))) == doctest::Approx(0.0));

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GaussianState s = squeezed_coherent(1, seed);
    CHECK(std::abs(schrodinger_margin(s)) < 1e-10);
  }

  const GaussianState unit(Vector::Zero(2), Matrix::Identity(2, 2));
  CHECK(schrodinger_margin(unit) == doctest::Approx(0.75));

  CHECK_THROWS_AS(schrodinger_margin(coherent_state(2, Vector::Zero(4))), ArgumentError);
}

TEST_CASE("characteristic margins on closed-form states") {
  const GaussianState c2 = coherent_state(2, Vector::Zero(4));
  const Vector margins = characteristic_margins(c2);
  CHECK(margins(0) == doctest::Approx(2.0));             // trace, commutator part vanishes
  CHECK(std::abs(margins(3)) < 1e-12);                   // maximal order: Robertson equality

  const Vector fock_margins = characteristic_margins(fock_state({1, 1}));
  CHECK(fock_margins(3) == doctest::Approx(std::pow(1.5, 4) - 1.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("characteristic margins are nonnegative over a randomized sweep") {
  int checked = 0;
  for (int modes = 1; modes <= 3; ++modes) {
    for (std::uint64_t i = 0; i < 60; ++i) {
      const Purity p = i % 2 ? Purity::Mixed : Purity::Pure;
      const GaussianState s = random_valid_state(modes, derive_stream_seed(777, i), p);
      const Vector margins = characteristic_margins(s);
      for (Eigen::Index r = 0; r < margins.size(); ++r) {
        CHECK(margins(r) >= -1e-9);
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("williamson of simple covariances") {
  const WilliamsonDecomposition w = williamson(0.5 * Matrix::Identity(4, 4));
  CHECK(max_abs(w.nu - Vector::Constant(2, 0.5)) < 1e-12);
  // for sigma = I/2 the diagonalizer is orthogonal symplectic
  CHECK(max_abs(w.S.matrix() * w.S.matrix().transpose() - Matrix::Identity(4, 4)) < 1e-10);

  const double r = 0.7;
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = std::exp(-2.0 * r) / 2.0;
  diag(1, 1) = std::exp(2.0 * r) / 2.0;
  CHECK(williamson(diag).nu(0) == doctest::Approx(0.5).epsilon(1e-12));

  const Vector nu = williamson(fock_state({0, 3, 1}).cov()).nu;
  Vector expected(3);
  expected << 0.5, 1.5, 3.5;
  CHECK(max_abs(nu - expected) < 1e-10);
}

TEST_CASE("williamson round trip on random covariances") {
  for (int modes = 1; modes <= 3; ++modes) {
    for (std::uint64_t i = 0; i < 10; ++i) {
      const GaussianState s = random_valid_state(modes, derive_stream_seed(31337, 10 * modes + i),
                                                 i % 2 ? Purity::Mixed : Purity::Pure);
      const WilliamsonDecomposition w = williamson(s.cov());
      CHECK(w.S.defect() < 1e-8);

      Vector d(2 * modes);
      d.head(modes) = w.nu;
      d.tail(modes) = w.nu;
      const Matrix normal = w.S.matrix() * s.cov() * w.S.matrix().transpose();
      CHECK(max_abs(normal - Matrix(d.asDiagonal())) < 1e-8);

      // inverse congruence recovers the covariance
      const Matrix inv = w.S.matrix().inverse();
      CHECK(max_abs(inv * Matrix(d.asDiagonal()) * inv.transpose() - s.cov()) < 1e-8);

      // ascending order
      for (Eigen::Index k = 1; k < w.nu.size(); ++k) CHECK(w.nu(k) >= w.nu(k - 1));
    }
  }
}

TEST_CASE("symplectic eigenvalues match the spectrum of J sigma") {
  // independent route: the eigenvalues of J sigma are the pure-imaginary
  // pairs +- i nu_k
  for (std::uint64_t i = 0; i < 8; ++i) {
    const int modes = 1 + static_cast<int>(i % 3);
    const GaussianState s = random_valid_state(modes, derive_stream_seed(60606, i),
                                               i % 2 ? Purity::Mixed : Purity::Pure);
    const Matrix js = symplectic_form(modes) * s.cov();
    Eigen::EigenSolver<Matrix> es(js);
    std::vector<double> moduli;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      CHECK(std::abs(es.eigenvalues()(k).real()) < 1e-10);
      moduli.push_back(std::abs(es.eigenvalues()(k)));
    }
    std::sort(moduli.begin(), moduli.end());
    const Vector nu = symplectic_eigenvalues(s.cov());
    const Vector nu_w = williamson(s.cov()).nu;
    for (int k = 0; k < modes; ++k) {
      CHECK(nu(k) == doctest::Approx(moduli[2 * k]).epsilon(1e-9));
      CHECK(nu_w(k) == doctest::Approx(moduli[2 * k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("williamson handles exact degeneracy") {
  // equal squeezing on both modes: nu = (1/2, 1/2), fourfold-degenerate K^T K
  Vector rr(2);
  rr << 0.4, 0.4;
  const GaussianState s = apply_ct(coherent_state(2, Vector::Zero(4)), squeeze_ct(rr));
  const WilliamsonDecomposition w = williamson(s.cov());
  CHECK(max_abs(w.nu - Vector::Constant(2, 0.5)) < 1e-10);
  CHECK(w.S.defect() < 1e-10);
}

TEST_CASE("williamson rejects bad input") {
  CHECK_THROWS_AS(williamson(Matrix::Identity(3, 3)), ArgumentError);
  Matrix notpd = Matrix::Identity(2, 2);
  notpd(1, 1) = -1.0;
  CHECK_THROWS_AS(williamson(notpd), ArgumentError);
  Matrix asym(2, 2);
  asym << 1.0, 0.2, -0.2, 1.0;
  CHECK_THROWS_AS(williamson(asym), ArgumentError);
}

TEST_CASE("normalized covariance has unit determinant") {
  CHECK(max_abs(normalized_sigma(0.5 * Matrix::Identity(4, 4)) - Matrix::Identity(4, 4)) <
        1e-14);
  CHECK(max_abs(normalized_sigma(fock_state({2, 2}).cov()) - Matrix::Identity(4, 4)) < 1e-14);

  const GaussianState s = random_valid_state(3, 99, Purity::Mixed);
  CHECK(normalized_sigma(s.cov()).determinant() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("normalized covariance is symplectic exactly on the equal-spectrum classes") {
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    CHECK(symplectic_sigma_test(squeezed_coherent(2, seed)).defect < 1e-8);
    CHECK(symplectic_sigma_test(squeezed_fock({2, 2}, seed)).defect < 1e-8);
  }

  const SymplecticSigmaReport bad = symplectic_sigma_test(fock_state({0, 1}));
  CHECK(bad.defect >= 0.1);
  CHECK(bad.mode_products(0) == doctest::Approx(0.25));
  CHECK(bad.mode_products(1) == doctest::Approx(2.25));
  CHECK(bad.target == doctest::Approx(0.75));
}

TEST_CASE("block conditions on the closed-form classes") {
  const BlockConditionResiduals coh = block_conditions(coherent_state(2, Vector::Zero(4)));
  CHECK(coh.pp_qq < 1e-14);
  CHECK(coh.cross < 1e-14);

  for (std::uint64_t seed : {41u, 42u}) {
    const GaussianState s = squeezed_coherent(2, seed);
    const BlockConditionResiduals r = block_conditions(s);
    CHECK(r.pp_qq < 1e-8);  // pp qq - pq^2 = (1/4) I
    CHECK(r.cross < 1e-8);

    const int n = 2;
    const Matrix pp = s.cov().topLeftCorner(n, n);
    const Matrix qq = s.cov().bottomRightCorner(n, n);
    const Matrix pq = s.cov().topRightCorner(n, n);
    CHECK(max_abs(pp * qq - pq * pq - 0.25 * Matrix::Identity(n, n)) < 1e-8);
  }

  for (int n : {1, 2}) {
    const GaussianState s = squeezed_fock(std::vector<int>(2, n), 50 + n);
    const int modes = 2;
    const Matrix pp = s.cov().topLeftCorner(modes, modes);
    const Matrix qq = s.cov().bottomRightCorner(modes, modes);
    const Matrix pq = s.cov().topRightCorner(modes, modes);
    const double expected = (0.5 + n) * (0.5 + n);
    CHECK(max_abs(pp * qq - pq * pq - expected * Matrix::Identity(modes, modes)) < 1e-8);
    CHECK(block_conditions(s).cross < 1e-8);
  }
}

TEST_CASE("block form of the Robertson margin matches the determinant form") {
  CHECK(block_robertson_margin(coherent_state(2, Vector::Zero(4))) ==
        doctest::Approx(0.0).epsilon(1e-12));

  for (std::uint64_t i = 0; i < 10; ++i) {
    const GaussianState s =
        random_valid_state(2 + static_cast<int>(i % 2), derive_stream_seed(1234, i),
                           i % 2 ? Purity::Mixed : Purity::Pure);
    const double via_blocks = block_robertson_margin(s);
    const double direct = robertson_margin(s);
    CHECK(via_blocks == doctest::Approx(direct).epsilon(1e-8).scale(1.0));
  }

  // with a symplectic normalized covariance the cross blocks commute and the
  // simplified form det[pp qq - pq^2] agrees
  const GaussianState s = squeezed_coherent(2, 71);
  const int n = 2;
  const Matrix pp = s.cov().topLeftCorner(n, n);
  const Matrix qq = s.cov().bottomRightCorner(n, n);
  const Matrix pq = s.cov().topRightCorner(n, n);
  const double simplified = (pp * qq - pq * pq).determinant() - std::pow(0.25, n);
  CHECK(block_robertson_margin(s) == doctest::Approx(simplified).epsilon(1e-8).scale(1.0));
}

TEST_CASE("per-mode quadratic form and its minimizer") {
  const HeisenbergLambdaForm coh = heisenberg_lambda_form(coherent_state(1, Vector::Zero(2)), 0);
  CHECK(coh.discriminant == doctest::Approx(0.0).epsilon(1e-12));
  REQUIRE(coh.lambda_star.has_value());
  CHECK(*coh.lambda_star == doctest::Approx(1.0));

  Vector rv(1);
  rv << 0.5;
  const GaussianState squeezed = apply_ct(coherent_state(1, Vector::Zero(2)), squeeze_ct(rv));
  const HeisenbergLambdaForm sq = heisenberg_lambda_form(squeezed, 0);
  CHECK(std::abs(sq.discriminant) < 1e-12);
  REQUIRE(sq.lambda_star.has_value());
  CHECK(*sq.lambda_star == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  // the oracle pins the same minimizer through the number-basis variances
  const oracles::ModeVariances ref = oracles::squeezed_vacuum_variances(0.5);
  CHECK(*sq.lambda_star == doctest::Approx(1.0 / (2.0 * ref.dq2)).epsilon(1e-6));

  const HeisenbergLambdaForm fock = heisenberg_lambda_form(fock_state({1}), 0);
  CHECK(fock.discriminant == doctest::Approx(-8.0));
  CHECK_FALSE(fock.lambda_star.has_value());

  CHECK_THROWS_AS(heisenberg_lambda_form(fock_state({1}), 1), ArgumentError);
}

TEST_CASE("robertson minimality detection") {
  for (std::uint64_t seed : {61u, 62u, 63u}) {
    CHECK(robertson_minimality(squeezed_coherent(2, seed)).minimal);
  }
  CHECK_FALSE(robertson_minimality(fock_state({1})).minimal);
  CHECK_FALSE(robertson_minimality(fock_state({0, 2})).minimal);
  CHECK_FALSE(robertson_minimality(random_valid_state(2, 64, Purity::Mixed)).minimal);

  // minimal class is contained in the symplectic-normalized class
  for (std::uint64_t seed : {65u, 66u}) {
    const GaussianState s = squeezed_coherent(3, seed);
    REQUIRE(robertson_minimality(s).minimal);
    CHECK(symplectic_sigma_test(s).defect < 1e-8);
  }
}

TEST_CASE("spectrum factorization of the determinant") {
  for (std::uint64_t i = 0; i < 12; ++i) {
    const GaussianState s = random_valid_state(3, derive_stream_seed(4242, i),
                                               i % 2 ? Purity::Mixed : Purity::Pure);
    const Vector nu = symplectic_eigenvalues(s.cov());
    double prod = 1.0;
    for (Eigen::Index k = 0; k < nu.size(); ++k) {
      const double pair = nu(k) * nu(k);  // s_k s_{N+k} in the normal frame
      CHECK(pair >= 0.25 - 1e-9);
      prod *= pair;
    }
    CHECK(prod == doctest::Approx(s.cov().determinant()).epsilon(1e-8));
  }
}

TEST_CASE("reports are invariant under symplectic congruence") {
  const GaussianState s = random_valid_state(2, 8080, Purity::Mixed);
  const UncertaintyReport base = analyze(s);
  for (std::uint64_t seed : {91u, 92u}) {
    const UncertaintyReport moved = analyze(apply_ct(s, random_symplectic(2, seed)));
    CHECK(moved.det_sigma == doctest::Approx(base.det_sigma).epsilon(1e-8));
    CHECK(max_abs(moved.nu - base.nu) < 1e-8);
    CHECK(moved.robertson_margin == doctest::Approx(base.robertson_margin).epsilon(1e-8));
    CHECK(moved.is_robertson_minimal == base.is_robertson_minimal);
  }

  // whether the normalized covariance is symplectic is a congruence invariant;
  // the residual's magnitude is not, so only the class membership transfers
  const GaussianState in_class = apply_ct(coherent_state(2, Vector::Zero(4)),
                                          random_symplectic(2, 93));
  REQUIRE(analyze(in_class).sympl_defect_normalized < 1e-8);
  const GaussianState out_of_class = fock_state({0, 1});
  REQUIRE(analyze(out_of_class).sympl_defect_normalized > 0.05);
  for (std::uint64_t seed : {94u, 95u}) {
    const SymplecticMatrix l = random_symplectic(2, seed);
    CHECK(analyze(apply_ct(in_class, l)).sympl_defect_normalized < 1e-8);
    CHECK(analyze(apply_ct(out_of_class, l)).sympl_defect_normalized > 0.05);
  }
}

TEST_CASE("analyze bundles the margins consistently") {
  const GaussianState s = random_valid_state(2, 555, Purity::Mixed);
  const UncertaintyReport r = analyze(s);
  CHECK(r.modes == 2);
  CHECK(r.char_margins.size() == 4);
  CHECK(r.char_margins(3) == doctest::Approx(r.robertson_margin).epsilon(1e-10).scale(1e-10));
  CHECK_FALSE(r.schrodinger_margin.has_value());

  const UncertaintyReport one = analyze(coherent_state(1, Vector::Zero(2)));
  REQUIRE(one.schrodinger_margin.has_value());
  CHECK(*one.schrodinger_margin == doctest::Approx(0.0));
  CHECK(one.is_robertson_minimal);
}

TEST_CASE("random audit finds no violations") {
  const AuditResult res = run_random_audit(2, 80, 2024);
  CHECK(res.violations == 0);
  CHECK(res.min_margin_per_order.size() == 4);
  CHECK(res.min_margin_per_order.minCoeff() >= -1e-9);
  CHECK(res.worst_sympl_defect_pure < 1e-8);

  // deterministic across calls
  const AuditResult again = run_random_audit(2, 80, 2024);
  CHECK(max_abs(res.min_margin_per_order - again.min_margin_per_order) == 0.0);
}
