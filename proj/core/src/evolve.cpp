#include "squint/evolve.hpp"

#include <cmath>

#include "squint/errors.hpp"
#include "squint/uncertainty.hpp"

namespace squint {

std::vector<StateEvolutionSample> evolve_state(const HamiltonianSpec& system,
                                               const GaussianState& state, double t0, double t1,
                                               double step, int samples,
                                               const PropagateOptions& opts) {
  if (system.modes() != state.modes()) {
    throw ArgumentError("evolve_state: Hamiltonian and state mode counts differ");
  }
  PropagateOptions local = opts;
  local.samples = samples;
  const PropagationResult traj = propagate_ct(system, t0, t1, step, local);

  std::vector<StateEvolutionSample> rows;
  rows.reserve(traj.times.size());
  const double floor = std::pow(0.25, state.modes());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const GaussianState moved = apply_ct(state, traj.lambdas[i]);
    StateEvolutionSample row;
    row.t = traj.times[i];
    row.variances = moved.cov().diagonal();
    row.det_sigma = moved.cov().determinant();
    row.robertson_margin = row.det_sigma - floor;
    row.nu = symplectic_eigenvalues(moved.cov());
    row.defect = traj.lambdas[i].defect();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace squint
