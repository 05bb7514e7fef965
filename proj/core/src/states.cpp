#include "squint/states.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "rng_detail.hpp"
#include "squint/errors.hpp"

namespace squint {

std::string StateValidation::summary() const {
  if (valid) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) os << '\n';
    os << failures[i];
  }
  return os.str();
}

StateValidation validate_state(const Vector& mean, const Matrix& cov, double tol) {
  if (mean.size() < 2 || mean.size() % 2 != 0) {
    throw ArgumentError("validate_state: mean must have even length 2N >= 2");
  }
  if (cov.rows() != mean.size() || cov.cols() != mean.size()) {
    throw ArgumentError("validate_state: covariance must be 2N x 2N matching the mean");
  }
  const int modes = static_cast<int>(mean.size()) / 2;

  StateValidation v;
  if (!mean.allFinite() || !cov.allFinite()) {
    v.failures.push_back("non-finite entries in mean or covariance");
    return v;
  }

  v.symmetry_residual = max_abs(cov - cov.transpose());
  if (v.symmetry_residual > tol) {
    v.failures.push_back("covariance asymmetric: max residual " +
                         std::to_string(v.symmetry_residual));
  }

  const Matrix sym = 0.5 * (cov + cov.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  v.min_cov_eigenvalue = es.eigenvalues().minCoeff();
  if (!(v.min_cov_eigenvalue > 0.0)) {
    v.failures.push_back("covariance not positive definite: min eigenvalue " +
                         std::to_string(v.min_cov_eigenvalue));
  }

  // Robertson matrix s + iC with C = -J/2, tested through its real embedding.
  const int d = 2 * modes;
  const Matrix j = symplectic_form(modes);
  Matrix embed(2 * d, 2 * d);
  embed.topLeftCorner(d, d) = sym;
  embed.topRightCorner(d, d) = 0.5 * j;
  embed.bottomLeftCorner(d, d) = -0.5 * j;
  embed.bottomRightCorner(d, d) = sym;
  Eigen::SelfAdjointEigenSolver<Matrix> er(embed, Eigen::EigenvaluesOnly);
  v.min_robertson_eigenvalue = er.eigenvalues().minCoeff();
  if (v.min_robertson_eigenvalue < -tol) {
    v.failures.push_back("Robertson matrix not positive semidefinite: min eigenvalue " +
                         std::to_string(v.min_robertson_eigenvalue));
  }

  v.valid = v.failures.empty();
  if (v.valid) {
    v.state = GaussianState(GaussianState::Trusted{}, modes, mean, sym);
  }
  return v;
}

GaussianState::GaussianState(Trusted, int modes, Vector mean, Matrix cov)
    : modes_(modes), mean_(std::move(mean)), cov_(std::move(cov)) {}

GaussianState::GaussianState(Vector mean, Matrix cov, double tol) {
  StateValidation v = validate_state(mean, cov, tol);
  if (!v.valid) {
    throw ValidationError("GaussianState: " + v.summary());
  }
  *this = std::move(*v.state);
}

GaussianState coherent_state(int modes, const Vector& mean) {
  if (modes < 1) throw ArgumentError("coherent_state: modes must be >= 1");
  if (mean.size() != 2 * modes) {
    throw ArgumentError("coherent_state: mean must have length 2N");
  }
  if (!mean.allFinite()) throw ArgumentError("coherent_state: mean must be finite");
  return GaussianState(mean, 0.5 * Matrix::Identity(2 * modes, 2 * modes));
}

GaussianState fock_state(const std::vector<int>& occupation) {
  if (occupation.empty()) throw ArgumentError("fock_state: need at least one mode");
  const int n = static_cast<int>(occupation.size());
  Matrix cov = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    if (occupation[k] < 0) throw ArgumentError("fock_state: occupation numbers must be >= 0");
    const double s = 0.5 + occupation[k];
    cov(k, k) = s;
    cov(n + k, n + k) = s;
  }
  return GaussianState(Vector::Zero(2 * n), std::move(cov));
}

GaussianState apply_ct(const GaussianState& state, const SymplecticMatrix& l) {
  if (state.modes() != l.modes()) throw ArgumentError("apply_ct: mode counts differ");
  if (l.defect() > 1e-6) {
    throw ArgumentError("apply_ct: refusing transport, symplectic defect " +
                        std::to_string(l.defect()));
  }
  const Matrix& m = l.matrix();
  Matrix cov = m * state.cov() * m.transpose();
  cov = 0.5 * (cov + cov.transpose());
  return GaussianState(m * state.mean(), std::move(cov));
}

GaussianState random_valid_state(int modes, std::uint64_t seed, Purity purity) {
  if (modes < 1) throw ArgumentError("random_valid_state: modes must be >= 1");
  std::mt19937_64 eng(seed);
  const Matrix k = detail::random_symmetric(eng, 2 * modes, 0.5);
  const Matrix s = matrix_exponential(symplectic_form(modes) * k);

  Vector d(2 * modes);
  for (int i = 0; i < modes; ++i) {
    const double nu = purity == Purity::Pure ? 0.5 : 0.5 + detail::exponential_unit(eng);
    d(i) = nu;
    d(modes + i) = nu;
  }
  Matrix cov = s * d.asDiagonal() * s.transpose();
  cov = 0.5 * (cov + cov.transpose());
  return GaussianState(Vector::Zero(2 * modes), std::move(cov));
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return detail::splitmix64(seed ^ detail::splitmix64(index));
}

}  // namespace squint
