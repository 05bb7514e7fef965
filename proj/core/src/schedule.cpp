#include "squint/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "squint/errors.hpp"

namespace squint {

namespace {

// Natural cubic spline: second derivatives at the nodes by the Thomas algorithm.
std::vector<double> spline_second_derivatives(const std::vector<double>& x,
                                              const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> m2(n, 0.0);
  const std::size_t interior = n - 2;
  std::vector<double> diag(interior), upper(interior), rhs(interior);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x[i] - x[i - 1];
    const double h1 = x[i + 1] - x[i];
    diag[i - 1] = (h0 + h1) / 3.0;
    upper[i - 1] = h1 / 6.0;
    rhs[i - 1] = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
  }
  // forward sweep; sub-diagonal entry for row i is h_i/6 = upper[i-1]
  for (std::size_t i = 1; i < interior; ++i) {
    const double w = upper[i - 1] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = interior; i-- > 0;) {
    const double carry = (i + 1 < interior) ? upper[i] * m2[i + 2] : 0.0;
    m2[i + 1] = (rhs[i] - carry) / diag[i];
  }
  return m2;
}

}  // namespace

Schedule Schedule::constant(Matrix value) {
  require_finite(value, "Schedule::constant");
  Schedule s(Kind::Constant);
  s.alpha_ = std::move(value);
  return s;
}

Schedule Schedule::exponential(Matrix alpha, double beta) {
  require_finite(alpha, "Schedule::exponential");
  if (!std::isfinite(beta)) throw ArgumentError("Schedule::exponential: beta must be finite");
  Schedule s(Kind::Exponential);
  s.alpha_ = std::move(alpha);
  s.scalar_beta_ = beta;
  return s;
}

Schedule Schedule::harmonic(Matrix alpha, Matrix beta, double gamma, double phi) {
  require_finite(alpha, "Schedule::harmonic");
  require_finite(beta, "Schedule::harmonic");
  if (alpha.rows() != beta.rows() || alpha.cols() != beta.cols()) {
    throw ArgumentError("Schedule::harmonic: alpha and beta shapes differ");
  }
  if (!std::isfinite(gamma) || !std::isfinite(phi)) {
    throw ArgumentError("Schedule::harmonic: gamma and phi must be finite");
  }
  Schedule s(Kind::Harmonic);
  s.alpha_ = std::move(alpha);
  s.beta_ = std::move(beta);
  s.gamma_ = gamma;
  s.phi_ = phi;
  return s;
}

Schedule Schedule::table(std::vector<double> times, std::vector<Matrix> values) {
  if (times.size() != values.size()) {
    throw ArgumentError("Schedule::table: times and values lengths differ");
  }
  if (times.size() < 4) {
    throw ArgumentError("Schedule::table: cubic interpolation needs at least 4 samples");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw ArgumentError("Schedule::table: times must be strictly increasing");
    }
  }
  const Eigen::Index r = values.front().rows();
  const Eigen::Index c = values.front().cols();
  for (const Matrix& v : values) {
    require_finite(v, "Schedule::table");
    if (v.rows() != r || v.cols() != c) {
      throw ArgumentError("Schedule::table: all sampled matrices must share one shape");
    }
  }

  Schedule s(Kind::Table);
  s.second_.assign(values.size(), Matrix::Zero(r, c));
  std::vector<double> series(times.size());
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      for (std::size_t k = 0; k < times.size(); ++k) series[k] = values[k](i, j);
      const std::vector<double> m2 = spline_second_derivatives(times, series);
      for (std::size_t k = 0; k < times.size(); ++k) s.second_[k](i, j) = m2[k];
    }
  }
  s.times_ = std::move(times);
  s.values_ = std::move(values);
  return s;
}

Schedule Schedule::sec_squared(double scale, double rate) {
  if (!std::isfinite(scale) || !std::isfinite(rate)) {
    throw ArgumentError("Schedule::sec_squared: parameters must be finite");
  }
  Schedule s(Kind::SecSquared);
  s.scale_ = scale;
  s.rate_ = rate;
  return s;
}

Eigen::Index Schedule::rows() const {
  switch (kind_) {
    case Kind::Table:      return values_.front().rows();
    case Kind::SecSquared: return 1;
    default:               return alpha_.rows();
  }
}

Eigen::Index Schedule::cols() const {
  switch (kind_) {
    case Kind::Table:      return values_.front().cols();
    case Kind::SecSquared: return 1;
    default:               return alpha_.cols();
  }
}

double Schedule::domain_min() const {
  return kind_ == Kind::Table ? times_.front() : -std::numeric_limits<double>::infinity();
}

double Schedule::domain_max() const {
  return kind_ == Kind::Table ? times_.back() : std::numeric_limits<double>::infinity();
}

void Schedule::require_in_domain(double t) const {
  if (!std::isfinite(t)) throw ArgumentError("Schedule: time must be finite");
  if (kind_ != Kind::Table) return;
  const double span = times_.back() - times_.front();
  const double slack = 1e-9 * std::max(1.0, span);
  if (t < times_.front() - slack || t > times_.back() + slack) {
    throw ArgumentError("Schedule: t = " + std::to_string(t) +
                        " outside table domain [" + std::to_string(times_.front()) + ", " +
                        std::to_string(times_.back()) + "]");
  }
}

double Schedule::clamp_to_domain(double t) const {
  return std::min(std::max(t, times_.front()), times_.back());
}

Eigen::Index Schedule::table_interval(double t) const {
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  auto i = static_cast<Eigen::Index>(it - times_.begin()) - 1;
  i = std::max<Eigen::Index>(0, std::min<Eigen::Index>(i, static_cast<Eigen::Index>(times_.size()) - 2));
  return i;
}

Matrix Schedule::value(double t) const {
  require_in_domain(t);
  switch (kind_) {
    case Kind::Constant:
      return alpha_;
    case Kind::Exponential:
      return alpha_ * std::exp(scalar_beta_ * t);
    case Kind::Harmonic:
      return alpha_ + beta_ * std::cos(gamma_ * t + phi_);
    case Kind::SecSquared: {
      const double c = std::cos(rate_ * t);
      if (std::abs(c) < 1e-6) {
        throw SingularityError("Schedule: sec^2 schedule singular at t = " + std::to_string(t));
      }
      Matrix out(1, 1);
      out(0, 0) = scale_ / (c * c);
      return out;
    }
    case Kind::Table: {
      const double tc = clamp_to_domain(t);
      const Eigen::Index i = table_interval(tc);
      const double h = times_[i + 1] - times_[i];
      const double a = (times_[i + 1] - tc) / h;
      const double b = (tc - times_[i]) / h;
      return a * values_[i] + b * values_[i + 1] +
             ((a * a * a - a) * second_[i] + (b * b * b - b) * second_[i + 1]) * (h * h) / 6.0;
    }
  }
  throw ArgumentError("Schedule: unknown kind");
}

Matrix Schedule::derivative(double t) const {
  require_in_domain(t);
  switch (kind_) {
    case Kind::Constant:
      return Matrix::Zero(alpha_.rows(), alpha_.cols());
    case Kind::Exponential:
      return alpha_ * (scalar_beta_ * std::exp(scalar_beta_ * t));
    case Kind::Harmonic:
      return beta_ * (-gamma_ * std::sin(gamma_ * t + phi_));
    case Kind::SecSquared: {
      const double c = std::cos(rate_ * t);
      if (std::abs(c) < 1e-6) {
        throw SingularityError("Schedule: sec^2 schedule singular at t = " + std::to_string(t));
      }
      const double sec2 = 1.0 / (c * c);
      const double tn = std::sin(rate_ * t) / c;
      Matrix out(1, 1);
      out(0, 0) = 2.0 * scale_ * rate_ * sec2 * tn;
      return out;
    }
    case Kind::Table: {
      const double tc = clamp_to_domain(t);
      const Eigen::Index i = table_interval(tc);
      const double h = times_[i + 1] - times_[i];
      const double a = (times_[i + 1] - tc) / h;
      const double b = (tc - times_[i]) / h;
      return (values_[i + 1] - values_[i]) / h -
             (3.0 * a * a - 1.0) * (h / 6.0) * second_[i] +
             (3.0 * b * b - 1.0) * (h / 6.0) * second_[i + 1];
    }
  }
  throw ArgumentError("Schedule: unknown kind");
}

Matrix Schedule::second_derivative(double t) const {
  require_in_domain(t);
  switch (kind_) {
    case Kind::Constant:
      return Matrix::Zero(alpha_.rows(), alpha_.cols());
    case Kind::Exponential:
      return alpha_ * (scalar_beta_ * scalar_beta_ * std::exp(scalar_beta_ * t));
    case Kind::Harmonic:
      return beta_ * (-gamma_ * gamma_ * std::cos(gamma_ * t + phi_));
    case Kind::SecSquared: {
      const double c = std::cos(rate_ * t);
      if (std::abs(c) < 1e-6) {
        throw SingularityError("Schedule: sec^2 schedule singular at t = " + std::to_string(t));
      }
      const double sec2 = 1.0 / (c * c);
      const double tn = std::sin(rate_ * t) / c;
      Matrix out(1, 1);
      out(0, 0) = 2.0 * scale_ * rate_ * rate_ * sec2 * (sec2 + 2.0 * tn * tn);
      return out;
    }
    case Kind::Table: {
      const double tc = clamp_to_domain(t);
      const Eigen::Index i = table_interval(tc);
      const double h = times_[i + 1] - times_[i];
      const double a = (times_[i + 1] - tc) / h;
      const double b = (tc - times_[i]) / h;
      return a * second_[i] + b * second_[i + 1];
    }
  }
  throw ArgumentError("Schedule: unknown kind");
}

}  // namespace squint
