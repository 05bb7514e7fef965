#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "squint/canonical.hpp"
#include "squint/evolve.hpp"
#include "squint/hamiltonian.hpp"
#include "squint/states.hpp"
#include "squint/uncertainty.hpp"

namespace squint {

/// Parses {"modes": N, "A": <schedule>, "B": <schedule>, "C": <schedule>}
/// or {"preset": <name>, ...params}. Schedule objects:
///   {"kind":"constant","value":[[...]]}
///   {"kind":"exponential","alpha":[[...]],"beta":s}
///   {"kind":"harmonic","alpha":[[...]],"beta":[[...]],"gamma":s,"phi":s}
///   {"kind":"table","times":[...],"values":[[[...]]],"interp":"cubic"}
/// Malformed input throws ArgumentError; linear terms ("d"/"e") are rejected.
HamiltonianSpec hamiltonian_from_json(const std::string& text);

/// Raw arrays of {"modes": N, "mean": [...2N...], "cov": [[...2Nx2N...]]},
/// parsed but not yet validated as a physical state.
struct StateInput {
  int modes = 0;
  Vector mean;
  Matrix cov;
};
StateInput state_input_from_json(const std::string& text);

/// Parse and validate in one step; throws ValidationError with the report
/// text when the state is unphysical.
GaussianState state_from_json(const std::string& text, double tol = 1e-9);

std::string state_to_json(const GaussianState& state);
std::string report_to_json(const UncertaintyReport& report);
std::string williamson_report_to_json(const Matrix& sigma, const WilliamsonDecomposition& w);
std::string audit_to_json(const AuditResult& audit);

// CSV emission. Numbers are printed with 17 significant digits so files
// round-trip losslessly; the separator is "," and a header row is mandatory.
void write_omega_csv(std::ostream& os, const HamiltonianSpec& spec, double t0, double t1,
                     int samples);
void write_propagation_csv(std::ostream& os, const PropagationResult& result);
void write_evolution_csv(std::ostream& os, const std::vector<StateEvolutionSample>& rows);

}  // namespace squint
