#pragma once

#include <vector>

#include "squint/matcore.hpp"

namespace squint {

/// Time-dependent matrix coefficient with analytic first and second
/// derivatives. Public kinds mirror the JSON schedule vocabulary:
/// constant, exponential alpha*e^{beta t}, harmonic alpha + beta*cos(gamma t + phi)
/// (entrywise), and a sampled table with natural cubic-spline interpolation.
/// The sec^2 kind exists only for the cosine-mass preset, whose kinetic
/// coefficient 1/(2 m0 cos^2(bt)) falls outside that vocabulary.
class Schedule {
public:
  enum class Kind { Constant, Exponential, Harmonic, Table, SecSquared };

  static Schedule constant(Matrix value);
  static Schedule exponential(Matrix alpha, double beta);
  static Schedule harmonic(Matrix alpha, Matrix beta, double gamma, double phi);
  /// Natural cubic spline through (times[i], values[i]); needs at least 4 samples.
  static Schedule table(std::vector<double> times, std::vector<Matrix> values);
  /// scale / cos^2(rate * t), scalar; throws SingularityError near cos = 0.
  static Schedule sec_squared(double scale, double rate);

  Kind kind() const { return kind_; }
  Eigen::Index rows() const;
  Eigen::Index cols() const;

  /// Table schedules are defined on [domain_min, domain_max] only.
  bool bounded_domain() const { return kind_ == Kind::Table; }
  double domain_min() const;
  double domain_max() const;
  /// Throws ArgumentError when t lies outside the domain (tiny roundoff slack allowed).
  void require_in_domain(double t) const;

  Matrix value(double t) const;
  Matrix derivative(double t) const;
  Matrix second_derivative(double t) const;

private:
  explicit Schedule(Kind kind) : kind_(kind) {}

  double clamp_to_domain(double t) const;
  Eigen::Index table_interval(double t) const;

  Kind kind_;
  Matrix alpha_;
  Matrix beta_;
  double scalar_beta_ = 0.0;
  double gamma_ = 0.0;
  double phi_ = 0.0;
  double scale_ = 0.0;
  double rate_ = 0.0;
  std::vector<double> times_;
  std::vector<Matrix> values_;
  std::vector<Matrix> second_;  // spline second derivatives at the nodes
};

}  // namespace squint
