#pragma once

#include <cstdint>
#include <optional>

#include "squint/canonical.hpp"
#include "squint/matcore.hpp"
#include "squint/states.hpp"

namespace squint {

/// Antisymmetric matrix of halved mean commutators for the canonical
/// observables (p, q): equals -J/2 with hbar = 1.
Matrix commutator_matrix(int modes);

/// det(sigma) - (1/4)^N; nonnegative (within tolerance) on physical states.
double robertson_margin(const GaussianState& state);

/// One-mode only: sigma_pp sigma_qq - sigma_pq^2 - 1/4.
double schrodinger_margin(const GaussianState& state);

/// C_r(sigma) - C_r(commutator) for r = 1..2N; the last entry is the
/// Robertson margin.
Vector characteristic_margins(const GaussianState& state);

/// Symplectic congruence to the normal form diag(nu, nu).
struct WilliamsonDecomposition {
  SymplecticMatrix S;  // S sigma S^T = diag(nu, nu)
  Vector nu;           // symplectic eigenvalues, ascending
};

/// Williamson diagonalization of a symmetric positive-definite matrix.
///
/// Construction: with R = sigma^{1/2} from the symmetric eigendecomposition,
/// the antisymmetric K = R J R is orthogonally reduced to
/// [[0, diag(nu)], [-diag(nu), 0]] by pairing invariant planes of K^T K
/// (eigenvalue nu^2 each, extracted as u, Ku/nu); then
/// S = diag(nu,nu)^{1/2} O^T sigma^{-1/2}. Degenerate and near-degenerate
/// eigenvalues are handled by the same subspace pairing.
WilliamsonDecomposition williamson(const Matrix& sigma);

/// The nu_k alone (moduli of the eigenvalues of J sigma), ascending.
Vector symplectic_eigenvalues(const Matrix& sigma);

/// sigma / (det sigma)^{1/2N}; unit determinant.
Matrix normalized_sigma(const Matrix& sigma);

struct SymplecticSigmaReport {
  double defect;         // max-abs of st J st^T - J for the normalized st
  Vector mode_products;  // s_k s_{N+k} = nu_k^2 in the Williamson frame
  double target;         // (det sigma)^{1/N}; products equal this iff st is symplectic
};

/// Tests whether the normalized uncertainty matrix is itself symplectic.
SymplecticSigmaReport symplectic_sigma_test(const GaussianState& state);

struct BlockConditionResiduals {
  double pp_qq;  // max-abs of sigma_pp sigma_qq - sigma_pq^2 - (det sigma)^{1/N} I
  double cross;  // worst of sigma_pp sigma_qp - sigma_pq sigma_pp and its qq partner
};

/// Residuals of the blockwise symplectic conditions on the covariance.
BlockConditionResiduals block_conditions(const GaussianState& state);

/// det[sigma_pp sigma_qq - sigma_pp sigma_qp sigma_pp^{-1} sigma_pq] - (1/4)^N;
/// the determinant itself equals det sigma.
double block_robertson_margin(const GaussianState& state);

/// The per-mode quadratic lambda^2 (dq)^2 - lambda + (dp)^2 >= 0 whose real
/// roots encode the Heisenberg inequality for that mode.
struct HeisenbergLambdaForm {
  double quadratic;     // (dq_k)^2
  double linear;        // -1
  double constant;      // (dp_k)^2
  double discriminant;  // 1 - 4 (dp_k)^2 (dq_k)^2, <= 0 up to tolerance
  std::optional<double> lambda_star;  // 1/(2 (dq_k)^2) when the mode is Heisenberg-minimal
};

/// mode is 0-based, 0 <= mode < N.
HeisenbergLambdaForm heisenberg_lambda_form(const GaussianState& state, int mode);

struct MinimalityResult {
  bool minimal;  // all symplectic eigenvalues equal 1/2 within 1e-8
  WilliamsonDecomposition certificate;
};

/// Detects the Robertson-equality class (squeezed coherent states).
MinimalityResult robertson_minimality(const GaussianState& state);

/// Defect of the det-normalized Robertson matrix st + i(-J) against
/// R J R^dag = J, complex arithmetic carried in real and imaginary parts.
/// Reported as a diagnostic only.
double robertson_matrix_defect(const GaussianState& state);

/// Everything above in one pass.
struct UncertaintyReport {
  int modes = 0;
  double det_sigma = 0.0;
  double robertson_margin = 0.0;
  Vector char_margins;  // orders 1..2N
  std::optional<double> schrodinger_margin;  // one-mode states only
  Vector nu;
  double sympl_defect_normalized = 0.0;
  BlockConditionResiduals block_residuals{};
  double robertson_matrix_defect = 0.0;
  bool is_robertson_minimal = false;
};

UncertaintyReport analyze(const GaussianState& state);

/// Randomized sweep of the inequality suite. Even sample indices draw pure
/// states, odd ones mixed; per-sample seeds derive from (seed, index).
struct AuditResult {
  int modes = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  Vector min_margin_per_order;      // elementwise minimum over the sweep
  int violations = 0;               // margins below -tol
  double worst_sympl_defect_pure = 0.0;
};

AuditResult run_random_audit(int modes, int samples, std::uint64_t seed, double tol = 1e-9);

}  // namespace squint
