// squint: symplectic propagation and uncertainty-matrix audits for
// N-mode quadratic Hamiltonians and Gaussian states.
//
// Exit codes: 0 success, 1 input/parse error, 2 validation or singularity,
// 3 numerical divergence.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "squint/errors.hpp"
#include "squint/evolve.hpp"
#include "squint/io.hpp"
#include "squint/uncertainty.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw squint::ArgumentError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw squint::ArgumentError("cannot open output file '" + out_path + "'");
  out << content;
}

struct Options {
  std::string config;
  std::string state;
  std::string out;
  double t0 = 0.0;
  double t1 = 1.0;
  double step = 0.0;  // 0 means (t1 - t0) / 1e4
  int samples = 100;
  std::uint64_t seed = 0;
  int modes = 1;
  double tol = 1e-9;
};

double effective_step(const Options& o) {
  return o.step > 0.0 ? o.step : (o.t1 - o.t0) / 1e4;
}

void require_window(const Options& o) {
  if (!(o.t1 > o.t0)) throw squint::ArgumentError("require --t1 > --t0");
  if (o.samples < 2) throw squint::ArgumentError("require --samples >= 2");
}

int run(const std::string& command, const Options& o) {
  using namespace squint;

  if (command == "omega") {
    require_window(o);
    const HamiltonianSpec spec = hamiltonian_from_json(slurp(o.config));
    std::ostringstream os;
    write_omega_csv(os, spec, o.t0, o.t1, o.samples);
    emit(o.out, os.str());
    return 0;
  }

  if (command == "propagate") {
    require_window(o);
    const HamiltonianSpec spec = hamiltonian_from_json(slurp(o.config));
    PropagateOptions popts;
    popts.samples = o.samples;
    const PropagationResult result = propagate_ct(spec, o.t0, o.t1, effective_step(o), popts);
    std::ostringstream os;
    write_propagation_csv(os, result);
    emit(o.out, os.str());
    std::fprintf(stderr, "final symplectic defect: %.17g\n", result.lambdas.back().defect());
    return 0;
  }

  if (command == "evolve-state") {
    require_window(o);
    const HamiltonianSpec spec = hamiltonian_from_json(slurp(o.config));
    const GaussianState state = state_from_json(slurp(o.state), o.tol);
    const auto rows = evolve_state(spec, state, o.t0, o.t1, effective_step(o), o.samples);
    std::ostringstream os;
    write_evolution_csv(os, rows);
    emit(o.out, os.str());
    return 0;
  }

  if (command == "analyze") {
    const GaussianState state = state_from_json(slurp(o.state), o.tol);
    emit(o.out, report_to_json(analyze(state)));
    return 0;
  }

  if (command == "williamson") {
    const GaussianState state = state_from_json(slurp(o.state), o.tol);
    emit(o.out, williamson_report_to_json(state.cov(), williamson(state.cov())));
    return 0;
  }

  if (command == "random-audit") {
    const AuditResult audit = run_random_audit(o.modes, o.samples, o.seed, o.tol);
    emit(o.out, audit_to_json(audit));
    return 0;
  }

  throw squint::ArgumentError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symplectic propagators and uncertainty-matrix audits for quadratic Hamiltonians"};
  app.require_subcommand(1);

  Options o;

  auto add_common = [&](CLI::App* cmd, bool window, bool wants_config, bool wants_state) {
    if (wants_config) {
      cmd->add_option("--config", o.config, "Hamiltonian JSON path")->required();
    }
    if (wants_state) {
      cmd->add_option("--state", o.state, "state JSON path")->required();
    }
    if (window) {
      cmd->add_option("--t0", o.t0, "window start");
      cmd->add_option("--t1", o.t1, "window end");
      cmd->add_option("--step", o.step, "integration step (default (t1-t0)/1e4)");
    }
    cmd->add_option("--samples", o.samples, "output sample count");
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--tol", o.tol, "validation tolerance override");
  };

  CLI::App* omega = app.add_subcommand("omega", "classical frequency-squared profile (CSV)");
  add_common(omega, true, true, false);

  CLI::App* propagate =
      app.add_subcommand("propagate", "canonical-transformation trajectory (CSV)");
  add_common(propagate, true, true, false);

  CLI::App* evolve = app.add_subcommand("evolve-state", "covariance transport along a run (CSV)");
  add_common(evolve, true, true, true);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "uncertainty report for a state (JSON)");
  add_common(analyze_cmd, false, false, true);

  CLI::App* will = app.add_subcommand("williamson", "Williamson normal form of a state (JSON)");
  add_common(will, false, false, true);

  CLI::App* audit = app.add_subcommand("random-audit", "randomized inequality sweep (JSON)");
  audit->add_option("--modes", o.modes, "mode count");
  audit->add_option("--samples", o.samples, "number of random states");
  audit->add_option("--seed", o.seed, "RNG seed")->required();
  audit->add_option("--out", o.out, "output path (stdout when omitted)");
  audit->add_option("--tol", o.tol, "violation threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const squint::DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const squint::NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const squint::SingularityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const squint::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
