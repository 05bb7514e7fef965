#include "squint/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "squint/errors.hpp"

namespace squint {

namespace {

constexpr double kMinimalityTol = 1e-8;

struct SqrtPair {
  Matrix root;      // sigma^{1/2}
  Matrix inv_root;  // sigma^{-1/2}
};

SqrtPair symmetric_square_root(const Matrix& sigma, const char* context) {
  require_finite(sigma, context);
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0 || sigma.rows() % 2 != 0) {
    throw ArgumentError(std::string(context) + ": need an even-dimensional square matrix");
  }
  if (!is_symmetric(sigma, 1e-9)) {
    throw ArgumentError(std::string(context) + ": matrix must be symmetric");
  }
  const Matrix sym = 0.5 * (sigma + sigma.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (!(es.eigenvalues().minCoeff() > 0.0)) {
    throw ArgumentError(std::string(context) + ": matrix must be positive definite");
  }
  const Vector sqrt_vals = es.eigenvalues().cwiseSqrt();
  SqrtPair out;
  out.root = es.eigenvectors() * sqrt_vals.asDiagonal() * es.eigenvectors().transpose();
  out.inv_root =
      es.eigenvectors() * sqrt_vals.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
  return out;
}

// Invariant planes of the antisymmetric K: pairs (u, w = Ku/nu) spanning the
// eigenspaces of K^T K, orthogonal across pairs by construction.
struct PairedPlanes {
  std::vector<Vector> u, w;
  std::vector<double> nu;
};

PairedPlanes pair_invariant_planes(const Matrix& k) {
  const Eigen::Index d = k.rows();
  const Matrix gram = k.transpose() * k;
  const Matrix ktk = 0.5 * (gram + gram.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(ktk);

  PairedPlanes planes;
  const Eigen::Index n_pairs = d / 2;
  for (Eigen::Index j = 0; j < d && static_cast<Eigen::Index>(planes.nu.size()) < n_pairs; ++j) {
    Vector v = es.eigenvectors().col(j);
    // Twice-is-enough Gram-Schmidt against the planes already extracted.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < planes.nu.size(); ++p) {
        v -= planes.u[p].dot(v) * planes.u[p];
        v -= planes.w[p].dot(v) * planes.w[p];
      }
    }
    const double norm = v.norm();
    if (norm < 1e-6) continue;  // direction already covered by an extracted partner
    const Vector u = v / norm;
    const Vector ku = k * u;
    const double nu = ku.norm();
    if (!(nu > 0.0)) {
      throw ArgumentError("williamson: singular symplectic spectrum");
    }
    planes.u.push_back(u);
    planes.w.push_back(ku / nu);
    planes.nu.push_back(nu);
  }
  if (static_cast<Eigen::Index>(planes.nu.size()) != n_pairs) {
    throw NumericError("williamson: invariant-plane extraction failed");
  }

  // stable ascending order
  std::vector<std::size_t> order(planes.nu.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return planes.nu[a] < planes.nu[b]; });
  PairedPlanes sorted;
  for (std::size_t i : order) {
    sorted.u.push_back(planes.u[i]);
    sorted.w.push_back(planes.w[i]);
    sorted.nu.push_back(planes.nu[i]);
  }
  return sorted;
}

Matrix blocks_pp(const GaussianState& s) {
  return s.cov().topLeftCorner(s.modes(), s.modes());
}
Matrix blocks_pq(const GaussianState& s) {
  return s.cov().topRightCorner(s.modes(), s.modes());
}
Matrix blocks_qp(const GaussianState& s) {
  return s.cov().bottomLeftCorner(s.modes(), s.modes());
}
Matrix blocks_qq(const GaussianState& s) {
  return s.cov().bottomRightCorner(s.modes(), s.modes());
}

double det_power_per_mode(const Matrix& sigma, int modes) {
  return std::pow(sigma.determinant(), 1.0 / static_cast<double>(modes));
}

}  // namespace

Matrix commutator_matrix(int modes) {
  return -0.5 * symplectic_form(modes);
}

double robertson_margin(const GaussianState& state) {
  return state.cov().determinant() - std::pow(0.25, state.modes());
}

double schrodinger_margin(const GaussianState& state) {
  if (state.modes() != 1) {
    throw ArgumentError("schrodinger_margin: defined for one mode only");
  }
  const Matrix& s = state.cov();
  return s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1) - 0.25;
}

Vector characteristic_margins(const GaussianState& state) {
  const Matrix c = commutator_matrix(state.modes());
  const Vector cs = characteristic_coefficients(state.cov());
  const Vector cc = characteristic_coefficients(c);
  return cs - cc;
}

WilliamsonDecomposition williamson(const Matrix& sigma) {
  const int modes = static_cast<int>(sigma.rows()) / 2;
  const SqrtPair sq = symmetric_square_root(sigma, "williamson");
  const Matrix j = symplectic_form(modes);
  Matrix k = sq.root * j * sq.root;
  k = 0.5 * (k - k.transpose());

  const PairedPlanes planes = pair_invariant_planes(k);

  Matrix o(2 * modes, 2 * modes);
  Vector nu(modes);
  Vector sqrt_d(2 * modes);
  for (int i = 0; i < modes; ++i) {
    o.col(i) = planes.w[i];
    o.col(modes + i) = planes.u[i];
    nu(i) = planes.nu[i];
    sqrt_d(i) = std::sqrt(planes.nu[i]);
    sqrt_d(modes + i) = sqrt_d(i);
  }
  const Matrix s = sqrt_d.asDiagonal() * o.transpose() * sq.inv_root;
  return {SymplecticMatrix(s, 1e-8), std::move(nu)};
}

Vector symplectic_eigenvalues(const Matrix& sigma) {
  const int modes = static_cast<int>(sigma.rows()) / 2;
  const SqrtPair sq = symmetric_square_root(sigma, "symplectic_eigenvalues");
  const Matrix j = symplectic_form(modes);
  Matrix k = sq.root * j * sq.root;
  k = 0.5 * (k - k.transpose());
  const Matrix gram = k.transpose() * k;
  const Matrix ktk = 0.5 * (gram + gram.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(ktk, Eigen::EigenvaluesOnly);
  Vector nu(modes);
  for (int i = 0; i < modes; ++i) {
    const double a = std::sqrt(std::max(0.0, es.eigenvalues()(2 * i)));
    const double b = std::sqrt(std::max(0.0, es.eigenvalues()(2 * i + 1)));
    nu(i) = 0.5 * (a + b);  // the spectrum comes in equal pairs
  }
  return nu;
}

Matrix normalized_sigma(const Matrix& sigma) {
  const int modes = static_cast<int>(sigma.rows()) / 2;
  symmetric_square_root(sigma, "normalized_sigma");  // shape/PD validation
  const double det = sigma.determinant();
  return sigma / std::pow(det, 1.0 / (2.0 * modes));
}

SymplecticSigmaReport symplectic_sigma_test(const GaussianState& state) {
  const Matrix st = normalized_sigma(state.cov());
  const Matrix j = symplectic_form(state.modes());
  SymplecticSigmaReport rep;
  rep.defect = max_abs(st * j * st.transpose() - j);
  const Vector nu = symplectic_eigenvalues(state.cov());
  rep.mode_products = nu.cwiseProduct(nu);
  rep.target = det_power_per_mode(state.cov(), state.modes());
  return rep;
}

BlockConditionResiduals block_conditions(const GaussianState& state) {
  const int n = state.modes();
  const Matrix pp = blocks_pp(state), pq = blocks_pq(state), qp = blocks_qp(state),
               qq = blocks_qq(state);
  const double target = det_power_per_mode(state.cov(), n);

  BlockConditionResiduals r;
  r.pp_qq = max_abs(pp * qq - pq * pq - target * Matrix::Identity(n, n));
  r.cross = std::max(max_abs(pp * qp - pq * pp), max_abs(qp * qq - qq * pq));
  return r;
}

double block_robertson_margin(const GaussianState& state) {
  const int n = state.modes();
  const Matrix pp = blocks_pp(state), pq = blocks_pq(state), qp = blocks_qp(state),
               qq = blocks_qq(state);
  Eigen::FullPivLU<Matrix> lu(pp);
  if (!lu.isInvertible()) {
    throw NumericError("block_robertson_margin: sigma_pp is singular");
  }
  const Matrix inner = pp * qq - pp * qp * lu.inverse() * pq;
  return inner.determinant() - std::pow(0.25, n);
}

HeisenbergLambdaForm heisenberg_lambda_form(const GaussianState& state, int mode) {
  if (mode < 0 || mode >= state.modes()) {
    throw ArgumentError("heisenberg_lambda_form: mode index out of range");
  }
  const double dp2 = state.cov()(mode, mode);
  const double dq2 = state.cov()(state.modes() + mode, state.modes() + mode);
  HeisenbergLambdaForm f;
  f.quadratic = dq2;
  f.linear = -1.0;
  f.constant = dp2;
  f.discriminant = 1.0 - 4.0 * dp2 * dq2;
  if (std::abs(f.discriminant) <= kMinimalityTol) {
    f.lambda_star = 1.0 / (2.0 * dq2);
  }
  return f;
}

MinimalityResult robertson_minimality(const GaussianState& state) {
  WilliamsonDecomposition w = williamson(state.cov());
  bool minimal = true;
  for (Eigen::Index i = 0; i < w.nu.size(); ++i) {
    if (std::abs(w.nu(i) - 0.5) > kMinimalityTol) {
      minimal = false;
      break;
    }
  }
  return {minimal, std::move(w)};
}

double robertson_matrix_defect(const GaussianState& state) {
  const Matrix x = normalized_sigma(state.cov());
  const Matrix j = symplectic_form(state.modes());
  const Matrix y = -j;  // commutator matrix normalized to unit determinant
  // (x + iy) J (x + iy)^dag - J, split into real and imaginary residuals
  const Matrix re = x * j * x.transpose() + y * j * y.transpose() - j;
  const Matrix im = y * j * x.transpose() - x * j * y.transpose();
  return std::max(max_abs(re), max_abs(im));
}

UncertaintyReport analyze(const GaussianState& state) {
  UncertaintyReport r;
  r.modes = state.modes();
  r.det_sigma = state.cov().determinant();
  r.robertson_margin = r.det_sigma - std::pow(0.25, state.modes());
  r.char_margins = characteristic_margins(state);
  if (state.modes() == 1) r.schrodinger_margin = schrodinger_margin(state);

  MinimalityResult min = robertson_minimality(state);
  r.nu = min.certificate.nu;
  r.is_robertson_minimal = min.minimal;

  const Matrix st = normalized_sigma(state.cov());
  const Matrix j = symplectic_form(state.modes());
  r.sympl_defect_normalized = max_abs(st * j * st.transpose() - j);
  r.block_residuals = block_conditions(state);
  r.robertson_matrix_defect = robertson_matrix_defect(state);
  return r;
}

AuditResult run_random_audit(int modes, int samples, std::uint64_t seed, double tol) {
  if (modes < 1) throw ArgumentError("run_random_audit: modes must be >= 1");
  if (samples < 1) throw ArgumentError("run_random_audit: samples must be >= 1");

  AuditResult res;
  res.modes = modes;
  res.samples = samples;
  res.seed = seed;
  res.min_margin_per_order = Vector::Constant(2 * modes, std::numeric_limits<double>::infinity());

  for (int i = 0; i < samples; ++i) {
    const Purity purity = (i % 2 == 0) ? Purity::Pure : Purity::Mixed;
    const GaussianState state =
        random_valid_state(modes, derive_stream_seed(seed, static_cast<std::uint64_t>(i)), purity);
    const Vector margins = characteristic_margins(state);
    for (Eigen::Index r = 0; r < margins.size(); ++r) {
      res.min_margin_per_order(r) = std::min(res.min_margin_per_order(r), margins(r));
      if (margins(r) < -tol) ++res.violations;
    }
    if (purity == Purity::Pure) {
      res.worst_sympl_defect_pure =
          std::max(res.worst_sympl_defect_pure, symplectic_sigma_test(state).defect);
    }
  }
  return res;
}

}  // namespace squint
