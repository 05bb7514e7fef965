#include "squint/io.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "squint/errors.hpp"

namespace squint {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("JSON parse error: ") + e.what());
  }
}

double number_at(const json& js, const std::string& key) {
  if (!js.contains(key) || !js.at(key).is_number()) {
    throw ArgumentError("expected numeric field '" + key + "'");
  }
  return js.at(key).get<double>();
}

Matrix matrix_from_json(const json& js, const std::string& what) {
  if (!js.is_array() || js.empty()) {
    throw ArgumentError(what + ": expected a non-empty array of rows");
  }
  const std::size_t rows = js.size();
  if (!js.at(0).is_array() || js.at(0).empty()) {
    throw ArgumentError(what + ": rows must be non-empty arrays of numbers");
  }
  const std::size_t cols = js.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = js.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw ArgumentError(what + ": ragged rows");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row.at(j).is_number()) throw ArgumentError(what + ": entries must be numbers");
      m(i, j) = row.at(j).get<double>();
    }
  }
  return m;
}

Vector vector_from_json(const json& js, const std::string& what) {
  if (!js.is_array() || js.empty()) throw ArgumentError(what + ": expected an array of numbers");
  Vector v(js.size());
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (!js.at(i).is_number()) throw ArgumentError(what + ": entries must be numbers");
    v(i) = js.at(i).get<double>();
  }
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Schedule schedule_from_json(const json& js, const std::string& what) {
  if (!js.is_object() || !js.contains("kind")) {
    throw ArgumentError(what + ": schedule object needs a 'kind' field");
  }
  const std::string kind = js.at("kind").get<std::string>();
  if (kind == "constant") {
    return Schedule::constant(matrix_from_json(js.at("value"), what + ".value"));
  }
  if (kind == "exponential") {
    return Schedule::exponential(matrix_from_json(js.at("alpha"), what + ".alpha"),
                                 number_at(js, "beta"));
  }
  if (kind == "harmonic") {
    return Schedule::harmonic(matrix_from_json(js.at("alpha"), what + ".alpha"),
                              matrix_from_json(js.at("beta"), what + ".beta"),
                              number_at(js, "gamma"), number_at(js, "phi"));
  }
  if (kind == "table") {
    if (js.contains("interp") && js.at("interp").get<std::string>() != "cubic") {
      throw ArgumentError(what + ": only cubic table interpolation is supported");
    }
    const json& jt = js.at("times");
    const json& jv = js.at("values");
    if (!jt.is_array() || !jv.is_array() || jt.size() != jv.size()) {
      throw ArgumentError(what + ": table needs equal-length 'times' and 'values' arrays");
    }
    std::vector<double> times;
    std::vector<Matrix> values;
    times.reserve(jt.size());
    values.reserve(jv.size());
    for (std::size_t i = 0; i < jt.size(); ++i) {
      if (!jt.at(i).is_number()) throw ArgumentError(what + ": times must be numbers");
      times.push_back(jt.at(i).get<double>());
      values.push_back(matrix_from_json(jv.at(i), what + ".values"));
    }
    return Schedule::table(std::move(times), std::move(values));
  }
  throw ArgumentError(what + ": unknown schedule kind '" + kind + "'");
}

void print_number(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

HamiltonianSpec hamiltonian_from_json(const std::string& text) {
  const json js = parse_text(text);
  try {
    if (!js.is_object()) throw ArgumentError("Hamiltonian JSON must be an object");
    if (js.contains("d") || js.contains("e")) {
      throw ArgumentError(
          "linear Hamiltonian terms (d.p + e.q) are not supported; displace the state's mean "
          "vector instead");
    }
    if (js.contains("preset")) {
      const std::string name = js.at("preset").get<std::string>();
      std::map<std::string, double> params;
      for (const auto& item : js.items()) {
        if (item.key() == "preset") continue;
        if (!item.value().is_number()) {
          throw ArgumentError("preset parameter '" + item.key() + "' must be a number");
        }
        params[item.key()] = item.value().get<double>();
      }
      return preset(name, params);
    }
    if (!js.contains("modes")) throw ArgumentError("Hamiltonian JSON needs 'modes' or 'preset'");
    const int modes = js.at("modes").get<int>();
    return HamiltonianSpec(modes, schedule_from_json(js.at("A"), "A"),
                           schedule_from_json(js.at("B"), "B"),
                           schedule_from_json(js.at("C"), "C"));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("Hamiltonian JSON: ") + e.what());
  }
}

StateInput state_input_from_json(const std::string& text) {
  const json js = parse_text(text);
  try {
    if (!js.is_object()) throw ArgumentError("state JSON must be an object");
    StateInput in;
    in.modes = static_cast<int>(number_at(js, "modes"));
    in.mean = vector_from_json(js.at("mean"), "mean");
    in.cov = matrix_from_json(js.at("cov"), "cov");
    if (in.modes < 1 || in.mean.size() != 2 * in.modes || in.cov.rows() != 2 * in.modes ||
        in.cov.cols() != 2 * in.modes) {
      throw ArgumentError("state JSON: mean must be 2N and cov 2Nx2N for modes = N");
    }
    return in;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("state JSON: ") + e.what());
  }
}

GaussianState state_from_json(const std::string& text, double tol) {
  const StateInput in = state_input_from_json(text);
  StateValidation v = validate_state(in.mean, in.cov, tol);
  if (!v.valid) throw ValidationError("invalid state:\n" + v.summary());
  return *v.state;
}

std::string state_to_json(const GaussianState& state) {
  json js;
  js["modes"] = state.modes();
  js["mean"] = vector_to_json(state.mean());
  js["cov"] = matrix_to_json(state.cov());
  return js.dump(2) + "\n";
}

std::string report_to_json(const UncertaintyReport& r) {
  json js;
  js["modes"] = r.modes;
  js["det_sigma"] = r.det_sigma;
  js["robertson_margin"] = r.robertson_margin;
  js["char_margins"] = vector_to_json(r.char_margins);
  js["nu"] = vector_to_json(r.nu);
  js["sympl_defect"] = r.sympl_defect_normalized;
  js["block_residuals"] = {{"o42a", r.block_residuals.pp_qq}, {"o42b", r.block_residuals.cross}};
  js["robertson_matrix_defect"] = r.robertson_matrix_defect;
  js["minimal"] = r.is_robertson_minimal;
  if (r.schrodinger_margin) js["schrodinger_margin"] = *r.schrodinger_margin;
  return js.dump(2) + "\n";
}

std::string williamson_report_to_json(const Matrix& sigma, const WilliamsonDecomposition& w) {
  const Matrix& s = w.S.matrix();
  Vector diag(2 * w.S.modes());
  diag.head(w.S.modes()) = w.nu;
  diag.tail(w.S.modes()) = w.nu;
  json js;
  js["modes"] = w.S.modes();
  js["nu"] = vector_to_json(w.nu);
  js["S"] = matrix_to_json(s);
  js["sympl_defect"] = w.S.defect();
  js["diag_residual"] = max_abs(s * sigma * s.transpose() - Matrix(diag.asDiagonal()));
  return js.dump(2) + "\n";
}

std::string audit_to_json(const AuditResult& a) {
  json js;
  js["modes"] = a.modes;
  js["samples"] = a.samples;
  js["seed"] = a.seed;
  js["min_margin_per_order"] = vector_to_json(a.min_margin_per_order);
  js["violations"] = a.violations;
  js["worst_sympl_defect_pure"] = a.worst_sympl_defect_pure;
  return js.dump(2) + "\n";
}

void write_omega_csv(std::ostream& os, const HamiltonianSpec& spec, double t0, double t1,
                     int samples) {
  if (!(t1 > t0)) throw ArgumentError("write_omega_csv: require t1 > t0");
  if (samples < 2) throw ArgumentError("write_omega_csv: require at least 2 samples");
  os << "t,omega2\n";
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double w2 = effective_frequency_squared(spec, t);
    print_number(os, t);
    os << ',';
    print_number(os, w2);
    os << '\n';
  }
}

void write_propagation_csv(std::ostream& os, const PropagationResult& result) {
  if (result.lambdas.empty()) throw ArgumentError("write_propagation_csv: empty trajectory");
  const Eigen::Index d = result.lambdas.front().matrix().rows();
  os << "t";
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) os << ",L[" << i << "][" << j << "]";
  }
  os << ",defect\n";
  for (std::size_t k = 0; k < result.times.size(); ++k) {
    print_number(os, result.times[k]);
    const Matrix& l = result.lambdas[k].matrix();
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        os << ',';
        print_number(os, l(i, j));
      }
    }
    os << ',';
    print_number(os, result.lambdas[k].defect());
    os << '\n';
  }
}

void write_evolution_csv(std::ostream& os, const std::vector<StateEvolutionSample>& rows) {
  if (rows.empty()) throw ArgumentError("write_evolution_csv: empty trajectory");
  const Eigen::Index d = rows.front().variances.size();
  const Eigen::Index n = rows.front().nu.size();
  os << "t";
  for (Eigen::Index i = 1; i <= d; ++i) os << ",s_" << i;
  os << ",det_sigma,robertson_margin";
  for (Eigen::Index i = 1; i <= n; ++i) os << ",nu_" << i;
  os << ",defect\n";
  for (const StateEvolutionSample& row : rows) {
    print_number(os, row.t);
    for (Eigen::Index i = 0; i < d; ++i) {
      os << ',';
      print_number(os, row.variances(i));
    }
    os << ',';
    print_number(os, row.det_sigma);
    os << ',';
    print_number(os, row.robertson_margin);
    for (Eigen::Index i = 0; i < n; ++i) {
      os << ',';
      print_number(os, row.nu(i));
    }
    os << ',';
    print_number(os, row.defect);
    os << '\n';
  }
}

}  // namespace squint
