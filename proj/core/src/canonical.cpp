#include "squint/canonical.hpp"

#include <cmath>
#include <random>
#include <string>

#include "rng_detail.hpp"
#include "squint/errors.hpp"

namespace squint {

SymplecticMatrix::SymplecticMatrix(Matrix m, double tol) : mat_(std::move(m)) {
  require_finite(mat_, "SymplecticMatrix");
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0 || mat_.rows() % 2 != 0) {
    throw ArgumentError("SymplecticMatrix: need a non-empty even square matrix");
  }
  modes_ = static_cast<int>(mat_.rows()) / 2;
  defect_ = symplectic_defect(mat_);
  if (defect_ > tol) {
    throw ArgumentError("SymplecticMatrix: defect " + std::to_string(defect_) +
                        " exceeds tolerance " + std::to_string(tol));
  }
}

SymplecticMatrix SymplecticMatrix::identity(int modes) {
  if (modes < 1) throw ArgumentError("SymplecticMatrix::identity: modes must be >= 1");
  return SymplecticMatrix(Matrix::Identity(2 * modes, 2 * modes));
}

double SymplecticMatrix::block_condition_residual() const {
  const Matrix pp = block_pp(), pq = block_pq(), qp = block_qp(), qq = block_qq();
  const Matrix unit = pp * qq.transpose() - pq * qp.transpose();
  const double r1 = max_abs(unit - Matrix::Identity(modes_, modes_));
  const Matrix s1 = qq * qp.transpose();
  const Matrix s2 = pq * pp.transpose();
  return std::max({r1, max_abs(s1 - s1.transpose()), max_abs(s2 - s2.transpose())});
}

SymplecticMatrix compose(const SymplecticMatrix& outer, const SymplecticMatrix& inner) {
  if (outer.modes() != inner.modes()) {
    throw ArgumentError("compose: mode counts differ");
  }
  const double tol = std::max(1e-8, 10.0 * (outer.defect() + inner.defect()));
  return SymplecticMatrix(outer.matrix() * inner.matrix(), tol);
}

SymplecticMatrix rotation_ct(const Vector& masses, const Vector& frequencies, double t) {
  if (masses.size() != frequencies.size() || masses.size() == 0) {
    throw ArgumentError("rotation_ct: masses and frequencies must have equal nonzero length");
  }
  const int n = static_cast<int>(masses.size());
  Matrix l = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double m = masses(k);
    const double w = frequencies(k);
    if (!(m > 0.0) || !(w > 0.0)) {
      throw ArgumentError("rotation_ct: masses and frequencies must be positive");
    }
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    l(k, k) = c;
    l(k, n + k) = -m * w * s;
    l(n + k, k) = s / (m * w);
    l(n + k, n + k) = c;
  }
  return SymplecticMatrix(std::move(l), 1e-12);
}

SymplecticMatrix squeeze_ct(const Vector& r) {
  if (r.size() == 0) throw ArgumentError("squeeze_ct: need at least one mode");
  if (!r.allFinite()) throw ArgumentError("squeeze_ct: parameters must be finite");
  const int n = static_cast<int>(r.size());
  Matrix l = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    l(k, k) = std::exp(-r(k));
    l(n + k, n + k) = std::exp(r(k));
  }
  return SymplecticMatrix(std::move(l), 1e-12);
}

SymplecticMatrix random_symplectic(int modes, std::uint64_t seed) {
  if (modes < 1) throw ArgumentError("random_symplectic: modes must be >= 1");
  std::mt19937_64 eng(seed);
  const Matrix k = detail::random_symmetric(eng, 2 * modes, 0.5);
  return SymplecticMatrix(matrix_exponential(symplectic_form(modes) * k));
}

namespace {

PropagationResult propagate_generic(const HamiltonianSpec& spec, double t0, double t1, double step,
                                    const PropagateOptions& opts, bool left_multiply,
                                    double factor) {
  if (!(t1 > t0)) throw ArgumentError("propagate: require t1 > t0");
  if (!(step > 0.0)) throw ArgumentError("propagate: require step > 0");
  if (opts.samples < 2) throw ArgumentError("propagate: require at least 2 output samples");
  if (opts.resym_interval < 1) throw ArgumentError("propagate: require resym_interval >= 1");
  if (opts.initial && opts.initial->modes() != spec.modes()) {
    throw ArgumentError("propagate: initial matrix mode count differs from the Hamiltonian");
  }
  spec.require_window(t0, t1);

  const auto steps = static_cast<long>(std::ceil((t1 - t0) / step - 1e-12));
  const long n_steps = std::max<long>(1, steps);
  const double h = (t1 - t0) / static_cast<double>(n_steps);

  const Matrix j = symplectic_form(spec.modes());
  auto field = [&](double t) -> Matrix {
    return factor * (j * assemble_grand_matrix(spec, t).mat);
  };
  auto apply = [&](const Matrix& f, const Matrix& l) -> Matrix {
    return left_multiply ? Matrix(f * l) : Matrix(l * f);
  };

  PropagationResult result;
  Matrix l = opts.initial ? opts.initial->matrix()
                          : Matrix::Identity(2 * spec.modes(), 2 * spec.modes());

  // Output rows sit on integration steps, spread evenly over [0, n_steps].
  std::vector<long> sample_steps;
  sample_steps.reserve(opts.samples);
  for (int i = 0; i < opts.samples; ++i) {
    const long s = std::lround(static_cast<double>(i) * static_cast<double>(n_steps) /
                               static_cast<double>(opts.samples - 1));
    if (sample_steps.empty() || s > sample_steps.back()) sample_steps.push_back(s);
  }
  std::size_t next_sample = 0;

  auto record = [&](long k) {
    if (next_sample < sample_steps.size() && sample_steps[next_sample] == k) {
      result.times.push_back(k == n_steps ? t1 : t0 + static_cast<double>(k) * h);
      result.lambdas.emplace_back(l, opts.divergence_threshold);
      ++next_sample;
    }
  };

  record(0);
  for (long k = 0; k < n_steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    const Matrix f1 = field(t);
    const Matrix fm = field(t + 0.5 * h);
    const Matrix f4 = field(std::min(t + h, t1));

    const Matrix k1 = apply(f1, l);
    const Matrix k2 = apply(fm, Matrix(l + 0.5 * h * k1));
    const Matrix k3 = apply(fm, Matrix(l + 0.5 * h * k2));
    const Matrix k4 = apply(f4, Matrix(l + h * k3));
    l += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (!l.allFinite()) {
      throw DivergenceError("propagate: state became non-finite (step too large)");
    }
    const double defect = symplectic_defect(l);
    result.max_defect = std::max(result.max_defect, defect);
    if (defect > opts.divergence_threshold) {
      throw DivergenceError("propagate: symplectic defect " + std::to_string(defect) +
                            " exceeded the divergence threshold (step too large)");
    }
    record(k + 1);
    if ((k + 1) % opts.resym_interval == 0 && defect > opts.resym_threshold) {
      l = resymplectify(l);
      result.corrected = true;
    }
  }
  return result;
}

}  // namespace

PropagationResult propagate_ct(const HamiltonianSpec& system, double t0, double t1, double step,
                               const PropagateOptions& opts) {
  return propagate_generic(system, t0, t1, step, opts, /*left_multiply=*/false, -2.0);
}

PropagationResult propagate_target_ct(const HamiltonianSpec& target, double t0, double t1,
                                      double step, const PropagateOptions& opts) {
  return propagate_generic(target, t0, t1, step, opts, /*left_multiply=*/true, 2.0);
}

SymplecticMatrix stationary_total_ct(const GrandMatrix& system, const GrandMatrix& target,
                                     double t) {
  if (system.modes != target.modes) throw ArgumentError("stationary_total_ct: mode counts differ");
  const Matrix j = symplectic_form(system.modes);
  const Matrix l =
      matrix_exponential(2.0 * t * j * target.mat) * matrix_exponential(-2.0 * t * j * system.mat);
  return SymplecticMatrix(l, 1e-10);
}

std::complex<double> ClassicalTrajectory::wronskian(std::size_t i) const {
  return zdot.at(i) * std::conj(z.at(i)) - z.at(i) * std::conj(zdot.at(i));
}

ClassicalTrajectory solve_classical_oscillator(const std::function<double(double)>& omega2,
                                               std::complex<double> z0,
                                               std::complex<double> zdot0, double t0, double t1,
                                               double step) {
  if (!(t1 > t0)) throw ArgumentError("solve_classical_oscillator: require t1 > t0");
  if (!(step > 0.0)) throw ArgumentError("solve_classical_oscillator: require step > 0");
  if (z0 == 0.0 && zdot0 == 0.0) {
    throw ArgumentError("solve_classical_oscillator: z0 and zdot0 must not both vanish");
  }

  const auto steps = static_cast<long>(std::ceil((t1 - t0) / step - 1e-12));
  const long n_steps = std::max<long>(1, steps);
  const double h = (t1 - t0) / static_cast<double>(n_steps);

  using C = std::complex<double>;
  ClassicalTrajectory traj;
  traj.times.reserve(n_steps + 1);
  traj.z.reserve(n_steps + 1);
  traj.zdot.reserve(n_steps + 1);

  C z = z0, v = zdot0;
  traj.times.push_back(t0);
  traj.z.push_back(z);
  traj.zdot.push_back(v);

  for (long k = 0; k < n_steps; ++k) {
    const double t = t0 + static_cast<double>(k) * h;
    const double w0 = omega2(t);
    const double wm = omega2(t + 0.5 * h);
    const double w1 = omega2(std::min(t + h, t1));

    const C kz1 = v, kv1 = -w0 * z;
    const C kz2 = v + 0.5 * h * kv1, kv2 = -wm * (z + 0.5 * h * kz1);
    const C kz3 = v + 0.5 * h * kv2, kv3 = -wm * (z + 0.5 * h * kz2);
    const C kz4 = v + h * kv3, kv4 = -w1 * (z + h * kz3);

    z += (h / 6.0) * (kz1 + 2.0 * kz2 + 2.0 * kz3 + kz4);
    v += (h / 6.0) * (kv1 + 2.0 * kv2 + 2.0 * kv3 + kv4);

    traj.times.push_back(k + 1 == n_steps ? t1 : t + h);
    traj.z.push_back(z);
    traj.zdot.push_back(v);
  }
  return traj;
}

}  // namespace squint
