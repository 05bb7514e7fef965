#include "squint/matcore.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "squint/errors.hpp"

namespace squint {

namespace {

void require_square(const Matrix& m, const char* context) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ArgumentError(std::string(context) + ": matrix must be square and non-empty");
  }
}

int half_dimension(const Matrix& m, const char* context) {
  require_square(m, context);
  if (m.rows() % 2 != 0) {
    throw ArgumentError(std::string(context) + ": dimension must be even");
  }
  return static_cast<int>(m.rows()) / 2;
}

}  // namespace

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.transpose()) <= tol;
}

void require_finite(const Matrix& m, const char* context) {
  if (!m.allFinite()) {
    throw ArgumentError(std::string(context) + ": matrix has non-finite entries");
  }
}

Matrix symplectic_form(int modes) {
  if (modes < 1) throw ArgumentError("symplectic_form: modes must be >= 1");
  Matrix j = Matrix::Zero(2 * modes, 2 * modes);
  j.topRightCorner(modes, modes).setIdentity();
  j.bottomLeftCorner(modes, modes) = -Matrix::Identity(modes, modes);
  return j;
}

double characteristic_coefficient(const Matrix& m, int order) {
  require_finite(m, "characteristic_coefficient");
  require_square(m, "characteristic_coefficient");
  const int n = static_cast<int>(m.rows());
  if (n > 12) {
    throw ArgumentError("characteristic_coefficient: principal-minor enumeration supports n <= 12");
  }
  if (order < 1 || order > n) {
    throw ArgumentError("characteristic_coefficient: order must be in 1.." + std::to_string(n));
  }

  std::vector<int> idx(order);
  std::iota(idx.begin(), idx.end(), 0);
  Matrix sub(order, order);
  double sum = 0.0;
  while (true) {
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) sub(i, j) = m(idx[i], idx[j]);
    }
    sum += sub.determinant();

    int k = order - 1;
    while (k >= 0 && idx[k] == n - order + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < order; ++i) idx[i] = idx[i - 1] + 1;
  }
  return sum;
}

Vector characteristic_coefficients(const Matrix& m) {
  require_square(m, "characteristic_coefficients");
  const int n = static_cast<int>(m.rows());
  Vector out(n);
  for (int r = 1; r <= n; ++r) out(r - 1) = characteristic_coefficient(m, r);
  return out;
}

Matrix matrix_exponential(const Matrix& m) {
  require_finite(m, "matrix_exponential");
  require_square(m, "matrix_exponential");
  const Eigen::Index n = m.rows();

  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  }
  const Matrix a = m * std::ldexp(1.0, -squarings);

  Matrix term = Matrix::Identity(n, n);
  Matrix sum = Matrix::Identity(n, n);
  for (int k = 1; k <= 18; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

double symplectic_defect(const Matrix& l) {
  require_finite(l, "symplectic_defect");
  const int modes = half_dimension(l, "symplectic_defect");
  const Matrix j = symplectic_form(modes);
  return max_abs(l * j * l.transpose() - j);
}

Matrix resymplectify(const Matrix& l) {
  require_finite(l, "resymplectify");
  const int modes = half_dimension(l, "resymplectify");
  Eigen::FullPivLU<Matrix> lu(l);
  if (!lu.isInvertible()) throw NumericError("resymplectify: matrix is singular");
  const Matrix j = symplectic_form(modes);
  // J^{-1} = -J
  return 0.5 * (l - j * lu.inverse().transpose() * j);
}

bool check_positive_definite(const Matrix& m, double tol) {
  require_finite(m, "check_positive_definite");
  require_square(m, "check_positive_definite");
  if (!is_symmetric(m, tol)) {
    throw ArgumentError("check_positive_definite: matrix is asymmetric beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > tol;
}

}  // namespace squint
