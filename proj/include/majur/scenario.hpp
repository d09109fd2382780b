#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "majur/bounds.hpp"
#include "majur/errors.hpp"
#include "majur/quantum.hpp"

namespace majur {

inline constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

// One state entry of a scenario file: either a (theta, phi) pair in degrees
// or an explicit amplitude list. Explicit amplitudes are normalized on load.
struct StateSpec {
  std::string label;
  std::optional<std::pair<double, double>> angles_deg;
  std::optional<std::vector<Complex>> amplitudes;

  PureState to_state() const {
    if (angles_deg) return make_state(angles_deg->first * kDegToRad, angles_deg->second * kDegToRad);
    double norm2 = 0.0;
    for (const Complex& a : *amplitudes) norm2 += std::norm(a);
    if (norm2 < 1e-12) throw SchemaError("state '" + label + "' has vanishing norm");
    std::vector<Complex> amps(*amplitudes);
    double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amps) a *= inv;
    return PureState(std::move(amps));
  }
};

// One measurement entry: a builtin name (kept so dumps stay readable) or an
// explicit effect list. Both are materialized and validated at parse time.
struct MeasurementSpec {
  std::optional<std::string> builtin;
  Measurement measurement;

  const Measurement& resolve() const { return measurement; }
};

struct Scenario {
  int dimension = 4;
  MurKind kind = MurKind::dp;
  std::optional<double> lambda;
  std::optional<std::vector<double>> weights;
  std::vector<MeasurementSpec> measurements;
  std::vector<StateSpec> states;

  MurScenario mur() const {
    MurScenario sc;
    sc.kind = kind;
    for (const auto& spec : measurements) sc.measurements.push_back(spec.resolve());
    if (lambda) sc.lambda = *lambda;
    if (weights) sc.weights = *weights;
    if (kind == MurKind::ds_multi && sc.weights.empty()) {
      sc.weights.assign(sc.measurements.size(), 1.0 / static_cast<double>(sc.measurements.size()));
    }
    return sc;
  }
};

namespace detail {

using nlohmann::json;

inline double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path + " must be a number");
  return j.get<double>();
}

inline Complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    throw SchemaError(path + " must be a two-element [re, im] array");
  }
  return Complex(require_number(j[0], path + "[0]"), require_number(j[1], path + "[1]"));
}

inline MurKind parse_kind(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + " must be a string");
  const std::string k = j.get<std::string>();
  if (k == "DP") return MurKind::dp;
  if (k == "DS") return MurKind::ds;
  if (k == "DP_MULTI") return MurKind::dp_multi;
  if (k == "DS_MULTI") return MurKind::ds_multi;
  throw SchemaError(path + " must be one of DP, DS, DP_MULTI, DS_MULTI");
}

inline MeasurementSpec parse_measurement(const json& j, int dimension, const std::string& path) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    try {
      return MeasurementSpec{name, builtin_measurement(name)};
    } catch (const UnknownName& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }
  if (!j.is_object()) throw SchemaError(path + " must be a builtin name or an object");
  std::string label = j.value("label", path);
  if (!j.contains("effects") || !j["effects"].is_array() || j["effects"].empty()) {
    throw SchemaError(path + ".effects must be a non-empty array of matrices");
  }
  std::vector<HermitianOperator> effects;
  for (std::size_t a = 0; a < j["effects"].size(); ++a) {
    const json& mat = j["effects"][a];
    const std::string mpath = path + ".effects[" + std::to_string(a) + "]";
    if (!mat.is_array() || static_cast<int>(mat.size()) != dimension) {
      throw SchemaError(mpath + " must be a " + std::to_string(dimension) + "-row matrix");
    }
    std::vector<std::vector<Complex>> rows;
    for (std::size_t r = 0; r < mat.size(); ++r) {
      const json& row = mat[r];
      const std::string rpath = mpath + "[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != dimension) {
        throw SchemaError(rpath + " must have " + std::to_string(dimension) + " entries");
      }
      std::vector<Complex> entries;
      for (std::size_t c = 0; c < row.size(); ++c) {
        entries.push_back(parse_complex(row[c], rpath + "[" + std::to_string(c) + "]"));
      }
      rows.push_back(std::move(entries));
    }
    try {
      effects.emplace_back(rows);
    } catch (const Error& e) {
      throw SchemaError(mpath + ": " + e.what());
    }
  }
  try {
    return MeasurementSpec{std::nullopt, Measurement(label, std::move(effects))};
  } catch (const Error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

inline StateSpec parse_state(const json& j, int dimension, const std::string& path) {
  StateSpec spec;
  if (!j.is_object()) throw SchemaError(path + " must be an object");
  spec.label = j.value("label", "");
  if (j.contains("theta_deg") || j.contains("phi_deg")) {
    if (!j.contains("theta_deg") || !j.contains("phi_deg")) {
      throw SchemaError(path + " needs both theta_deg and phi_deg");
    }
    if (dimension != 4) {
      throw SchemaError(path + ": angle states are only defined for dimension 4");
    }
    spec.angles_deg = {require_number(j["theta_deg"], path + ".theta_deg"),
                       require_number(j["phi_deg"], path + ".phi_deg")};
    if (spec.label.empty()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "theta%g_phi%g", spec.angles_deg->first,
                    spec.angles_deg->second);
      spec.label = buf;
    }
    return spec;
  }
  if (!j.contains("amplitudes")) {
    throw SchemaError(path + " needs either theta_deg/phi_deg or amplitudes");
  }
  const json& amps = j["amplitudes"];
  if (!amps.is_array() || static_cast<int>(amps.size()) != dimension) {
    throw SchemaError(path + ".amplitudes must list " + std::to_string(dimension) + " entries");
  }
  std::vector<Complex> values;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    values.push_back(parse_complex(amps[i], path + ".amplitudes[" + std::to_string(i) + "]"));
  }
  spec.amplitudes = std::move(values);
  return spec;
}

}  // namespace detail

inline Scenario parse_scenario(const nlohmann::json& j) {
  using detail::json;
  if (!j.is_object()) throw SchemaError("scenario root must be an object");
  Scenario sc;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer()) {
    throw SchemaError("dimension must be an integer");
  }
  sc.dimension = j["dimension"].get<int>();
  if (sc.dimension < 1 || sc.dimension > 64) throw SchemaError("dimension must lie in [1, 64]");
  if (!j.contains("kind")) throw SchemaError("kind is required");
  sc.kind = detail::parse_kind(j["kind"], "kind");

  if (!j.contains("measurements") || !j["measurements"].is_array() || j["measurements"].empty()) {
    throw SchemaError("measurements must be a non-empty array");
  }
  for (std::size_t i = 0; i < j["measurements"].size(); ++i) {
    sc.measurements.push_back(detail::parse_measurement(
        j["measurements"][i], sc.dimension, "measurements[" + std::to_string(i) + "]"));
  }
  if ((sc.kind == MurKind::dp || sc.kind == MurKind::ds) && sc.measurements.size() != 2) {
    throw SchemaError("measurements must list exactly two entries for kind " +
                      std::string(to_string(sc.kind)));
  }

  if (j.contains("lambda")) {
    double lam = detail::require_number(j["lambda"], "lambda");
    if (!(lam > 0.0 && lam <= 1.0)) throw SchemaError("lambda must lie in (0, 1]");
    sc.lambda = lam;
  } else if (sc.kind == MurKind::ds) {
    throw SchemaError("lambda is required for kind DS");
  }

  if (j.contains("weights")) {
    if (!j["weights"].is_array() || j["weights"].size() != sc.measurements.size()) {
      throw SchemaError("weights must list one entry per measurement");
    }
    std::vector<double> w;
    for (std::size_t i = 0; i < j["weights"].size(); ++i) {
      w.push_back(detail::require_number(j["weights"][i], "weights[" + std::to_string(i) + "]"));
    }
    sc.weights = std::move(w);
  }

  if (j.contains("states")) {
    if (!j["states"].is_array()) throw SchemaError("states must be an array");
    for (std::size_t i = 0; i < j["states"].size(); ++i) {
      StateSpec spec =
          detail::parse_state(j["states"][i], sc.dimension, "states[" + std::to_string(i) + "]");
      if (spec.label.empty()) spec.label = "state" + std::to_string(i);
      sc.states.push_back(std::move(spec));
    }
  }

  // cross-check explicit matrices against the stated dimension
  for (std::size_t i = 0; i < sc.measurements.size(); ++i) {
    const Measurement& m = sc.measurements[i].resolve();
    if (m.dim() != sc.dimension) {
      throw SchemaError("measurements[" + std::to_string(i) + "] acts on dimension " +
                        std::to_string(m.dim()) + ", scenario says " +
                        std::to_string(sc.dimension));
    }
  }
  return sc;
}

inline nlohmann::json dump_scenario(const Scenario& sc) {
  nlohmann::json j;
  j["dimension"] = sc.dimension;
  j["kind"] = to_string(sc.kind);
  if (sc.lambda) j["lambda"] = *sc.lambda;
  if (sc.weights) j["weights"] = *sc.weights;
  j["measurements"] = nlohmann::json::array();
  for (const auto& spec : sc.measurements) {
    if (spec.builtin) {
      j["measurements"].push_back(*spec.builtin);
      continue;
    }
    const Measurement& m = spec.measurement;
    nlohmann::json effects = nlohmann::json::array();
    for (const auto& effect : m.effects()) {
      nlohmann::json mat = nlohmann::json::array();
      for (int r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.dim(); ++c) {
          row.push_back({effect.at(r, c).real(), effect.at(r, c).imag()});
        }
        mat.push_back(std::move(row));
      }
      effects.push_back(std::move(mat));
    }
    j["measurements"].push_back({{"label", m.label()}, {"effects", std::move(effects)}});
  }
  j["states"] = nlohmann::json::array();
  for (const auto& spec : sc.states) {
    nlohmann::json s;
    if (!spec.label.empty()) s["label"] = spec.label;
    if (spec.angles_deg) {
      s["theta_deg"] = spec.angles_deg->first;
      s["phi_deg"] = spec.angles_deg->second;
    } else {
      nlohmann::json amps = nlohmann::json::array();
      for (const Complex& a : *spec.amplitudes) amps.push_back({a.real(), a.imag()});
      s["amplitudes"] = std::move(amps);
    }
    j["states"].push_back(std::move(s));
  }
  return j;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("scenario file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(j);
}

// CSV layout shared by --emit-lorenz and the lorenz subcommand:
// header label,k,height, LF line ends, 15 significant digits.
inline void write_lorenz_csv(std::ostream& out,
                             const std::vector<std::pair<std::string, LorenzCurve>>& curves) {
  out << "label,k,height\n";
  char buf[64];
  for (const auto& [label, curve] : curves) {
    for (std::size_t k = 0; k < curve.heights.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.15g", curve.heights[k]);
      out << label << ',' << k << ',' << buf << '\n';
    }
  }
}

}  // namespace majur
