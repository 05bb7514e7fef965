#pragma once

#include <map>
#include <string>

#include "squint/matcore.hpp"
#include "squint/schedule.hpp"

namespace squint {

/// 2N x 2N symmetric packaging [[A, B], [B^T, C]] of a quadratic Hamiltonian
/// at a fixed time, in (p, q) ordering.
struct GrandMatrix {
  int modes;
  Matrix mat;
};

/// N-mode quadratic Hamiltonian given by its time-dependent coefficient
/// blocks: A multiplies p.p terms, B the p.q terms, C the q.q terms.
/// A and C must stay symmetric over time; B is an arbitrary real N x N block.
class HamiltonianSpec {
public:
  HamiltonianSpec(int modes, Schedule a, Schedule b, Schedule c);

  int modes() const { return modes_; }
  const Schedule& block_a() const { return a_; }
  const Schedule& block_b() const { return b_; }
  const Schedule& block_c() const { return c_; }

  /// Throws ArgumentError unless all three schedules cover [t0, t1].
  void require_window(double t0, double t1) const;

private:
  int modes_;
  Schedule a_, b_, c_;
};

/// Assembles [[A(t), B(t)], [B(t)^T, C(t)]]; the result is exactly symmetric.
/// Throws ValidationError when A(t) or C(t) is asymmetric beyond tol.
GrandMatrix assemble_grand_matrix(const HamiltonianSpec& spec, double t, double tol = 1e-9);

/// Constant Hamiltonian of N uncoupled oscillators:
/// A = diag(1/(2 m_k)), B = 0, C = diag(m_k w_k^2 / 2).
HamiltonianSpec target_oscillator(const Vector& masses, const Vector& frequencies);

/// The auxiliary classical frequency of a one-mode quadratic Hamiltonian,
///   W^2(t) = 4ac + 2b a'/a + a''/(2a) - 3 a'^2/(4a^2) - 4b^2 - 2b'.
/// All schedules must be scalar. Throws SingularityError when a(t) = 0 or the
/// combination is not finite.
double effective_frequency_squared(const Schedule& a, const Schedule& b, const Schedule& c,
                                   double t);
double effective_frequency_squared(const HamiltonianSpec& spec, double t);

// One-mode preset families.
HamiltonianSpec preset_stationary(double mass, double omega);
/// Exponentially varying mass m(t) = m0 e^{-2bt}; realized with zero p.q block.
HamiltonianSpec preset_varying_mass(double m0, double b, double omega0);
/// Constant mass, harmonic frequency-squared w^2(t) = alpha + beta cos(gamma t + phi).
HamiltonianSpec preset_varying_frequency(double mass, double alpha, double beta, double gamma,
                                         double phi);
/// Oscillating mass m(t) = m0 cos^2(bt); singular where cos(bt) = 0.
HamiltonianSpec preset_cosine_mass(double m0, double b, double omega0);

/// Dispatch by name: stationary, varying_mass, varying_frequency, cosine_mass.
HamiltonianSpec preset(const std::string& name, const std::map<std::string, double>& params);

}  // namespace squint
