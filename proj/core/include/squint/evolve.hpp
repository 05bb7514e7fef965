#pragma once

#include <vector>

#include "squint/canonical.hpp"
#include "squint/hamiltonian.hpp"
#include "squint/states.hpp"

namespace squint {

/// One output row of a covariance-transport run: diagonal variances, the
/// symplectic-congruence invariants, and the transporting matrix's defect.
struct StateEvolutionSample {
  double t = 0.0;
  Vector variances;         // diagonal of sigma(t), (p, q) ordering
  double det_sigma = 0.0;
  double robertson_margin = 0.0;
  Vector nu;                // symplectic eigenvalues of sigma(t)
  double defect = 0.0;
};

/// Propagates the canonical transformation of `system` and transports the
/// state along it: mean -> L mean, sigma -> L sigma L^T at each sample.
std::vector<StateEvolutionSample> evolve_state(const HamiltonianSpec& system,
                                               const GaussianState& state, double t0, double t1,
                                               double step, int samples,
                                               const PropagateOptions& opts = {});

}  // namespace squint
