#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "squint/canonical.hpp"
#include "squint/matcore.hpp"

namespace squint {

struct StateValidation;

/// Gaussian state of N modes: first moments (2N mean vector, (p, q) ordering,
/// hbar = 1) plus a 2N x 2N covariance matrix. Construction enforces the
/// validate_state invariants and throws ValidationError when they fail.
class GaussianState {
public:
  GaussianState(Vector mean, Matrix cov, double tol = 1e-9);

  int modes() const { return modes_; }
  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }

private:
  struct Trusted {};
  GaussianState(Trusted, int modes, Vector mean, Matrix cov);
  friend StateValidation validate_state(const Vector&, const Matrix&, double);

  int modes_ = 0;
  Vector mean_;
  Matrix cov_;
};

/// Outcome of checking a (mean, covariance) pair against the physical-state
/// invariants. When valid, `state` holds the accepted Gaussian state.
struct StateValidation {
  bool valid = false;
  std::vector<std::string> failures;
  double symmetry_residual = 0.0;
  double min_cov_eigenvalue = 0.0;
  double min_robertson_eigenvalue = 0.0;
  std::optional<GaussianState> state;

  std::string summary() const;  // one failure per line, or "valid"
};

/// Accepts iff the covariance is symmetric (within tol), positive definite,
/// and the real embedding [[s, J/2], [-J/2, s]] of the Robertson matrix
/// s - iJ/2 has smallest eigenvalue >= -tol. Dimension problems throw
/// ArgumentError; physics failures are reported, not thrown.
StateValidation validate_state(const Vector& mean, const Matrix& cov, double tol = 1e-9);

/// Covariance I/2: every variance minimal and equal.
GaussianState coherent_state(int modes, const Vector& mean);

/// Zero mean, covariance diag(1/2 + n_k) duplicated over the p and q blocks.
GaussianState fock_state(const std::vector<int>& occupation);

/// Transport mean -> L mean, covariance -> L cov L^T. Refuses transport when
/// the defect of L exceeds 1e-6.
GaussianState apply_ct(const GaussianState& state, const SymplecticMatrix& l);

enum class Purity { Pure, Mixed };

/// sigma = S diag(nu, nu) S^T with S = exp(J K), K random symmetric;
/// nu_k = 1/2 for pure draws, 1/2 + Exp(1) for mixed ones. Deterministic in
/// the seed.
GaussianState random_valid_state(int modes, std::uint64_t seed, Purity purity);

/// Deterministic per-sample stream seed for concurrent randomized audits.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace squint
