#include "squint/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "squint/errors.hpp"

namespace squint {

namespace {

Matrix scalar_matrix(double v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

void check_block_shape(const Schedule& s, int modes, const char* name) {
  if (s.rows() != modes || s.cols() != modes) {
    throw ArgumentError(std::string("HamiltonianSpec: block ") + name + " must be " +
                        std::to_string(modes) + "x" + std::to_string(modes));
  }
}

double scalar_at(const Schedule& s, double t) { return s.value(t)(0, 0); }

}  // namespace

HamiltonianSpec::HamiltonianSpec(int modes, Schedule a, Schedule b, Schedule c)
    : modes_(modes), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (modes < 1) throw ArgumentError("HamiltonianSpec: modes must be >= 1");
  check_block_shape(a_, modes, "A");
  check_block_shape(b_, modes, "B");
  check_block_shape(c_, modes, "C");
}

void HamiltonianSpec::require_window(double t0, double t1) const {
  for (const Schedule* s : {&a_, &b_, &c_}) {
    s->require_in_domain(t0);
    s->require_in_domain(t1);
  }
}

GrandMatrix assemble_grand_matrix(const HamiltonianSpec& spec, double t, double tol) {
  const int n = spec.modes();
  Matrix a = spec.block_a().value(t);
  const Matrix b = spec.block_b().value(t);
  Matrix c = spec.block_c().value(t);
  if (max_abs(a - a.transpose()) > tol) {
    throw ValidationError("assemble_grand_matrix: block A asymmetric at t = " + std::to_string(t));
  }
  if (max_abs(c - c.transpose()) > tol) {
    throw ValidationError("assemble_grand_matrix: block C asymmetric at t = " + std::to_string(t));
  }
  a = 0.5 * (a + a.transpose());
  c = 0.5 * (c + c.transpose());

  Matrix h(2 * n, 2 * n);
  h.topLeftCorner(n, n) = a;
  h.topRightCorner(n, n) = b;
  h.bottomLeftCorner(n, n) = b.transpose();
  h.bottomRightCorner(n, n) = c;
  return {n, std::move(h)};
}

HamiltonianSpec target_oscillator(const Vector& masses, const Vector& frequencies) {
  if (masses.size() != frequencies.size() || masses.size() == 0) {
    throw ArgumentError("target_oscillator: masses and frequencies must have equal nonzero length");
  }
  const int n = static_cast<int>(masses.size());
  for (int k = 0; k < n; ++k) {
    if (!(masses(k) > 0.0) || !(frequencies(k) > 0.0)) {
      throw ArgumentError("target_oscillator: masses and frequencies must be positive");
    }
  }
  Matrix a = Matrix::Zero(n, n);
  Matrix c = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    a(k, k) = 1.0 / (2.0 * masses(k));
    c(k, k) = masses(k) * frequencies(k) * frequencies(k) / 2.0;
  }
  return {n, Schedule::constant(a), Schedule::constant(Matrix::Zero(n, n)),
          Schedule::constant(c)};
}

double effective_frequency_squared(const Schedule& a, const Schedule& b, const Schedule& c,
                                   double t) {
  for (const Schedule* s : {&a, &b, &c}) {
    if (s->rows() != 1 || s->cols() != 1) {
      throw ArgumentError("effective_frequency_squared: defined for one mode only");
    }
  }
  const double av = scalar_at(a, t);
  if (av == 0.0) {
    throw SingularityError("effective_frequency_squared: a(t) = 0 at t = " + std::to_string(t));
  }
  const double ad = a.derivative(t)(0, 0);
  const double add = a.second_derivative(t)(0, 0);
  const double bv = scalar_at(b, t);
  const double bd = b.derivative(t)(0, 0);
  const double cv = scalar_at(c, t);

  const double w2 = 4.0 * av * cv + 2.0 * bv * ad / av + add / (2.0 * av) -
                    3.0 * ad * ad / (4.0 * av * av) - 4.0 * bv * bv - 2.0 * bd;
  if (!std::isfinite(w2)) {
    throw SingularityError("effective_frequency_squared: non-finite value at t = " +
                           std::to_string(t));
  }
  return w2;
}

double effective_frequency_squared(const HamiltonianSpec& spec, double t) {
  if (spec.modes() != 1) {
    throw ArgumentError("effective_frequency_squared: defined for one mode only");
  }
  return effective_frequency_squared(spec.block_a(), spec.block_b(), spec.block_c(), t);
}

HamiltonianSpec preset_stationary(double mass, double omega) {
  if (!(mass > 0.0) || !(omega >= 0.0)) {
    throw ArgumentError("preset stationary: require m > 0 and omega >= 0");
  }
  return {1, Schedule::constant(scalar_matrix(1.0 / (2.0 * mass))),
          Schedule::constant(scalar_matrix(0.0)),
          Schedule::constant(scalar_matrix(mass * omega * omega / 2.0))};
}

HamiltonianSpec preset_varying_mass(double m0, double b, double omega0) {
  if (!(m0 > 0.0) || !(omega0 >= 0.0)) {
    throw ArgumentError("preset varying_mass: require m0 > 0 and omega0 >= 0");
  }
  // m(t) = m0 e^{-2bt}:  a = e^{2bt}/(2 m0),  c = m0 e^{-2bt} w0^2/2
  return {1, Schedule::exponential(scalar_matrix(1.0 / (2.0 * m0)), 2.0 * b),
          Schedule::constant(scalar_matrix(0.0)),
          Schedule::exponential(scalar_matrix(m0 * omega0 * omega0 / 2.0), -2.0 * b)};
}

HamiltonianSpec preset_varying_frequency(double mass, double alpha, double beta, double gamma,
                                         double phi) {
  if (!(mass > 0.0)) throw ArgumentError("preset varying_frequency: require m > 0");
  return {1, Schedule::constant(scalar_matrix(1.0 / (2.0 * mass))),
          Schedule::constant(scalar_matrix(0.0)),
          Schedule::harmonic(scalar_matrix(mass * alpha / 2.0), scalar_matrix(mass * beta / 2.0),
                             gamma, phi)};
}

HamiltonianSpec preset_cosine_mass(double m0, double b, double omega0) {
  if (!(m0 > 0.0) || !(omega0 >= 0.0)) {
    throw ArgumentError("preset cosine_mass: require m0 > 0 and omega0 >= 0");
  }
  // m(t) = m0 cos^2(bt):  a = sec^2(bt)/(2 m0),  c = m0 w0^2 (1 + cos(2bt))/4
  const double amp = m0 * omega0 * omega0 / 4.0;
  return {1, Schedule::sec_squared(1.0 / (2.0 * m0), b), Schedule::constant(scalar_matrix(0.0)),
          Schedule::harmonic(scalar_matrix(amp), scalar_matrix(amp), 2.0 * b, 0.0)};
}

HamiltonianSpec preset(const std::string& name, const std::map<std::string, double>& params) {
  auto get = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) {
      throw ArgumentError("preset " + name + ": missing parameter '" + key + "'");
    }
    return it->second;
  };
  if (name == "stationary") return preset_stationary(get("m"), get("omega"));
  if (name == "varying_mass") return preset_varying_mass(get("m0"), get("b"), get("omega0"));
  if (name == "varying_frequency") {
    return preset_varying_frequency(get("m"), get("alpha"), get("beta"), get("gamma"), get("phi"));
  }
  if (name == "cosine_mass") return preset_cosine_mass(get("m0"), get("b"), get("omega0"));
  throw ArgumentError("unknown preset '" + name + "'");
}

}  // namespace squint
