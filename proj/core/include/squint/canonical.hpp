#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "squint/hamiltonian.hpp"
#include "squint/matcore.hpp"

namespace squint {

/// A 2N x 2N real matrix carrying a linear canonical transformation in
/// (p, q) ordering, validated against L J L^T = J at construction.
class SymplecticMatrix {
public:
  /// Throws ArgumentError when the dimension is odd or the symplectic defect
  /// exceeds tol.
  explicit SymplecticMatrix(Matrix m, double tol = 1e-8);

  static SymplecticMatrix identity(int modes);

  int modes() const { return modes_; }
  const Matrix& matrix() const { return mat_; }
  double defect() const { return defect_; }

  Matrix block_pp() const { return mat_.topLeftCorner(modes_, modes_); }
  Matrix block_pq() const { return mat_.topRightCorner(modes_, modes_); }
  Matrix block_qp() const { return mat_.bottomLeftCorner(modes_, modes_); }
  Matrix block_qq() const { return mat_.bottomRightCorner(modes_, modes_); }

  /// Worst residual of the blockwise symplectic conditions
  /// pp qq^T - pq qp^T = I and the two symmetry constraints qq qp^T, pq pp^T.
  double block_condition_residual() const;

private:
  Matrix mat_;
  int modes_ = 0;
  double defect_ = 0.0;
};

/// Matrix product outer * inner with a tolerance widened by both defects.
SymplecticMatrix compose(const SymplecticMatrix& outer, const SymplecticMatrix& inner);

/// The oscillator-evolution rotation: per mode,
///   q' = q cos(w t) + p sin(w t)/(m w),   p' = -m w q sin(w t) + p cos(w t).
SymplecticMatrix rotation_ct(const Vector& masses, const Vector& frequencies, double t);

/// Diagonal squeeze: e^{-r_k} on the p block, e^{+r_k} on the q block.
/// Matches the covariance action of exp[r(a^dag^2 - a^2)/2] per mode.
SymplecticMatrix squeeze_ct(const Vector& r);

/// exp(J K) for a seeded random symmetric K with entries uniform in
/// [-1/2, 1/2]; deterministic in the seed.
SymplecticMatrix random_symplectic(int modes, std::uint64_t seed);

struct PropagateOptions {
  int samples = 100;                   // output rows, endpoints included
  int resym_interval = 100;            // steps between drift-correction checks
  double resym_threshold = 1e-10;      // correct only when the defect exceeds this
  double divergence_threshold = 1e-4;  // defect beyond this aborts the run
  std::optional<SymplecticMatrix> initial;  // defaults to the identity
};

struct PropagationResult {
  std::vector<double> times;
  std::vector<SymplecticMatrix> lambdas;
  double max_defect = 0.0;  // worst raw defect seen before any correction
  bool corrected = false;
};

/// Integrates dL/dt = L * (-2 J H(t)) from L(t0) with classical fixed-step RK4:
/// the canonical transformation generated by evolving the system backward.
PropagationResult propagate_ct(const HamiltonianSpec& system, double t0, double t1, double step,
                               const PropagateOptions& opts = {});

/// Integrates dL/dt = (+2 J H'(t)) * L: the transformation generated by the
/// target system running forward.
PropagationResult propagate_target_ct(const HamiltonianSpec& target, double t0, double t1,
                                      double step, const PropagateOptions& opts = {});

/// Closed form for constant grand matrices:
///   L(t) = exp(2 J H_target t) * exp(-2 J H_system t).
SymplecticMatrix stationary_total_ct(const GrandMatrix& system, const GrandMatrix& target,
                                     double t);

/// Solution samples of z'' + W^2(t) z = 0.
struct ClassicalTrajectory {
  std::vector<double> times;
  std::vector<std::complex<double>> z;
  std::vector<std::complex<double>> zdot;

  /// W(t_i) = zdot z* - z zdot*, a constant of the motion.
  std::complex<double> wronskian(std::size_t i) const;
};

ClassicalTrajectory solve_classical_oscillator(const std::function<double(double)>& omega2,
                                               std::complex<double> z0,
                                               std::complex<double> zdot0, double t0, double t1,
                                               double step);

}  // namespace squint
