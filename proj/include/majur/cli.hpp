#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "majur/bounds.hpp"
#include "majur/errors.hpp"
#include "majur/game.hpp"
#include "majur/measures.hpp"
#include "majur/scenario.hpp"

namespace majur {

struct CliOptions {
  int jobs = 1;
  SubsetBudget budget;
};

namespace detail {

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// nonzero prefix of a vector (plus one trailing zero as a cue), formatted
inline std::string format_vector(const std::vector<double>& v, const char* spec) {
  std::size_t last = v.size();
  while (last > 0 && v[last - 1] == 0.0) --last;
  std::size_t shown = std::min(v.size(), last + 1);
  std::string out = "(";
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out += ", ";
    out += fmt(spec, v[i]);
  }
  if (shown < v.size()) out += ", ...";
  out += ")";
  return out;
}

inline std::vector<double> scaled_copy(const std::vector<double>& v, double c) {
  std::vector<double> out(v);
  for (double& x : out) x *= c;
  return out;
}

inline nlohmann::json bound_to_json(const BoundVector& bound) {
  nlohmann::json j;
  j["kind"] = bound_label(bound.kind);
  if (bound.lambda) j["lambda"] = *bound.lambda;
  if (bound.weights) j["weights"] = *bound.weights;
  j["cumulative"] = bound.cumulative.partial_sums();
  j["increments"] = bound.increments;
  j["sorted"] = bound.raw.components();
  j["flattened"] = bound.flattened.components();
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// verify-paper: the published reference values for the built-in scenarios,
// with the tolerance each comparison runs at.

struct ReferenceCheck {
  std::string name;
  std::vector<double> computed;
  std::vector<double> target;  // zero-padded to the computed length
  double tolerance;
  std::string note;

  double max_deviation() const {
    double dev = 0.0;
    std::size_t n = std::max(computed.size(), target.size());
    for (std::size_t i = 0; i < n; ++i) {
      double c = i < computed.size() ? computed[i] : 0.0;
      double t = i < target.size() ? target[i] : 0.0;
      dev = std::max(dev, std::abs(c - t));
    }
    return dev;
  }
  bool passes(double tol_override = 0.0) const {
    return max_deviation() <= (tol_override > 0.0 ? tol_override : tolerance);
  }
};

inline std::vector<ReferenceCheck> reference_checks(const SubsetBudget& budget = {},
                                                    int jobs = 1) {
  const Measurement A = builtin_measurement("A");
  const Measurement B = builtin_measurement("B");
  const std::vector<Measurement> cs{builtin_measurement("C1"), builtin_measurement("C2"),
                                    builtin_measurement("C3")};
  const std::vector<double> third(3, 1.0 / 3.0);

  const BoundVector t = dp_bound_t(A, B, budget, jobs);
  const BoundVector s = ds_bound_s(A, B, 0.5, budget, jobs);
  const BoundVector tp = dp_multi_bound(cs, budget, jobs);
  const BoundVector sp = ds_multi_bound(cs, third, budget, jobs);

  std::vector<ReferenceCheck> checks;
  checks.push_back({"t (A,B)", t.increments, {0.5625, 0.1661, 0.2714}, 5e-5,
                    "reference prints 4 decimals"});
  checks.push_back({"F(t) (A,B)", t.flattened.components(), {0.5625, 0.21875, 0.21875}, 1e-9, ""});
  checks.push_back({"2s(1/2) (A,B)", detail::scaled_copy(s.increments, 2.0),
                    {1.0, 0.5, 0.2071, 0.2929}, 5e-5,
                    "published triple covers entries 2-4; entry 1 is 2*S_1 = 1"});
  checks.push_back({"2F(s(1/2)) (A,B)", detail::scaled_copy(s.flattened.components(), 2.0),
                    {1.0, 0.5, 0.25, 0.25}, 1e-9, ""});
  checks.push_back({"F(t') (C1,C2,C3)", tp.flattened.components(), {0.7773, 0.2227}, 5e-5, ""});
  checks.push_back({"3F(s'(1/3)) (C1,C2,C3)", detail::scaled_copy(sp.flattened.components(), 3.0),
                    {1.0, 1.0, 0.7583, 0.2417}, 5e-5, ""});
  checks.push_back({"H(F(t'))", {shannon_entropy(tp.flattened)}, {0.7651}, 2e-4, "bits"});
  checks.push_back({"H(3F(s'(1/3)))", {shannon_entropy(sp.flattened.scaled(3.0))}, {0.7979},
                    2e-4, "bits"});
  return checks;
}

// Computes every built-in reference quantity and compares at the stated
// tolerance (or a uniform override). Exit 0 iff all rows pass.
inline int cmd_verify_paper(const CliOptions& opts, double tol_override, std::ostream& out,
                            const std::string& json_path = "") {
  std::vector<ReferenceCheck> checks = reference_checks(opts.budget, opts.jobs);
  bool all_pass = true;
  out << "verify-paper: built-in reference values\n";
  for (const auto& c : checks) {
    bool pass = c.passes(tol_override);
    all_pass = all_pass && pass;
    double tol = tol_override > 0.0 ? tol_override : c.tolerance;
    out << "  [" << (pass ? "PASS" : "FAIL") << "] " << c.name << "\n"
        << "         computed " << detail::format_vector(c.computed, "%.6g") << "\n"
        << "         target   " << detail::format_vector(c.target, "%.6g") << "   max|diff| "
        << detail::fmt("%.3e", c.max_deviation()) << "  tol " << detail::fmt("%.1e", tol);
    if (!c.note.empty()) out << "   (" << c.note << ")";
    out << "\n";
  }
  out << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  if (!json_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) {
      j.push_back({{"name", c.name},
                   {"computed", c.computed},
                   {"target", c.target},
                   {"tolerance", tol_override > 0.0 ? tol_override : c.tolerance},
                   {"max_deviation", c.max_deviation()},
                   {"pass", c.passes(tol_override)}});
    }
    std::ofstream f(json_path);
    if (!f) throw IoError("cannot write JSON report to '" + json_path + "'");
    f << j.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct BoundsCommand {
  std::string scenario_path;
  std::string json_path;          // optional report
  std::string lorenz_path;        // optional CSV
  std::string dump_scenario_path; // optional normalized re-dump
};

inline std::vector<std::pair<std::string, LorenzCurve>> scenario_curves(
    const Scenario& scenario, const MurScenario& mur, const BoundVector& bound) {
  std::vector<std::pair<std::string, LorenzCurve>> curves;
  for (const auto& spec : scenario.states) {
    curves.emplace_back(spec.label, lorenz_curve(joint_uncertainty(spec.to_state(), mur)));
  }
  const std::string label = bound_label(bound.kind);
  curves.emplace_back(label, lorenz_curve(bound.raw));
  curves.emplace_back("F(" + label + ")", lorenz_curve(bound.flattened));
  return curves;
}

inline int cmd_bounds(const CliOptions& opts, const BoundsCommand& cmd, std::ostream& out) {
  Scenario scenario = load_scenario(cmd.scenario_path);
  MurScenario mur = scenario.mur();
  BoundVector bound = compute_bound(mur, opts.budget, opts.jobs);
  const std::string label = bound_label(bound.kind);

  out << "scenario " << cmd.scenario_path << "  kind " << to_string(mur.kind)
      << "  measurements";
  for (const auto& m : mur.measurements) out << " " << m.label();
  if (mur.kind == MurKind::ds) out << "  lambda " << detail::fmt("%g", mur.lambda);
  if (mur.kind == MurKind::ds_multi) {
    out << "  weights " << detail::format_vector(mur.weights, "%g");
  }
  out << "\n";
  out << "  " << label << "      " << detail::format_vector(bound.increments, "%.4f") << "\n";
  out << "           " << detail::format_vector(bound.increments, "%.17g") << "\n";
  out << "  F(" << label << ")   " << detail::format_vector(bound.flattened.components(), "%.4f")
      << "\n";
  out << "           " << detail::format_vector(bound.flattened.components(), "%.17g") << "\n";

  bool all_chains = true;
  nlohmann::json jstates = nlohmann::json::array();
  for (const auto& spec : scenario.states) {
    MurVerdict verdict = verify_mur(spec.to_state(), mur, bound);
    all_chains = all_chains && verdict.chain_holds();
    out << "  state " << spec.label << ": joint<F(" << label << ") "
        << (verdict.joint_below_flattened ? "yes" : "NO") << ", F(" << label << ")<" << label
        << " " << (verdict.flattened_below_raw ? "yes" : "NO") << "\n";
    if (!cmd.json_path.empty()) {
      jstates.push_back({{"label", spec.label},
                         {"joint_sorted", verdict.joint.components()},
                         {"joint_below_flattened", verdict.joint_below_flattened},
                         {"joint_below_raw", verdict.joint_below_raw},
                         {"flattened_below_raw", verdict.flattened_below_raw}});
    }
  }

  if (!cmd.json_path.empty()) {
    nlohmann::json j;
    j["scenario"] = dump_scenario(scenario);
    j["bound"] = detail::bound_to_json(bound);
    j["states"] = std::move(jstates);
    std::ofstream f(cmd.json_path);
    if (!f) throw IoError("cannot write JSON report to '" + cmd.json_path + "'");
    f << j.dump(2) << "\n";
  }
  if (!cmd.lorenz_path.empty()) {
    std::ofstream f(cmd.lorenz_path, std::ios::binary);
    if (!f) throw IoError("cannot write Lorenz CSV to '" + cmd.lorenz_path + "'");
    write_lorenz_csv(f, scenario_curves(scenario, mur, bound));
  }
  if (!cmd.dump_scenario_path.empty()) {
    std::ofstream f(cmd.dump_scenario_path);
    if (!f) throw IoError("cannot write scenario to '" + cmd.dump_scenario_path + "'");
    f << dump_scenario(scenario).dump(2) << "\n";
  }
  return all_chains ? 0 : 1;
}

inline int cmd_lorenz(const CliOptions& opts, const std::string& scenario_path,
                      const std::string& output_path, std::ostream& out) {
  Scenario scenario = load_scenario(scenario_path);
  MurScenario mur = scenario.mur();
  BoundVector bound = compute_bound(mur, opts.budget, opts.jobs);
  auto curves = scenario_curves(scenario, mur, bound);
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw IoError("cannot write Lorenz CSV to '" + output_path + "'");
  write_lorenz_csv(f, curves);
  out << "wrote " << curves.size() << " curves to " << output_path << "\n";
  return 0;
}

inline int cmd_simulate_game(const CliOptions& opts, const std::string& scenario_path,
                             std::uint64_t trials, std::uint64_t seed, int k,
                             std::ostream& out) {
  Scenario scenario = load_scenario(scenario_path);
  MurScenario mur = scenario.mur();
  if (mur.kind != MurKind::dp && mur.kind != MurKind::ds) {
    throw InvalidArgument("simulate-game runs two-measurement DP or DS scenarios");
  }
  if (scenario.states.empty()) throw InvalidArgument("scenario lists no states to simulate");
  const GameKind kind = mur.kind == MurKind::dp ? GameKind::dp : GameKind::ds;
  out << "guessing game  kind " << to_string(mur.kind) << "  trials " << trials << "  seed "
      << seed << "  k " << k << "\n";
  out << "  state              empirical    exact        bound        sigma     within\n";
  for (const auto& spec : scenario.states) {
    GameConfig config{kind,       spec.to_state(), mur.measurements[0], mur.measurements[1],
                      mur.lambda, trials,          seed,                k};
    GameResult r = simulate(config, opts.budget, opts.jobs);
    bool within = r.empirical_top_k <= r.bound_value + 4.0 * r.std_error;
    char line[160];
    std::snprintf(line, sizeof line, "  %-18s %-12.6f %-12.6f %-12.6f %-9.2e %s\n",
                  spec.label.c_str(), r.empirical_top_k, r.exact_top_k, r.bound_value,
                  r.std_error, within ? "yes" : "NO");
    out << line;
  }
  return 0;
}

inline int cmd_entropy(const CliOptions& opts, const std::string& scenario_path,
                       std::ostream& out) {
  Scenario scenario = load_scenario(scenario_path);
  MurScenario mur = scenario.mur();
  BoundVector bound = compute_bound(mur, opts.budget, opts.jobs);
  const std::string label = bound_label(bound.kind);
  out << "entropies (bits), kind " << to_string(mur.kind) << "\n";
  out << "  H(F(" << label << ")) = " << detail::fmt("%.6f", shannon_entropy(bound.flattened))
      << "\n";
  if (scenario.states.empty()) return 0;
  for (const auto& spec : scenario.states) {
    PureState state = spec.to_state();
    out << "  state " << spec.label << ":";
    double sum_h = 0.0;
    for (const auto& m : mur.measurements) {
      double h = shannon_entropy(WeightVector(born_probabilities(state, m)));
      sum_h += h;
      out << "  H(" << m.label() << ")=" << detail::fmt("%.4f", h);
    }
    if (mur.measurements.size() > 2) out << "  sum=" << detail::fmt("%.4f", sum_h);
    WeightVector joint = joint_uncertainty(state, mur);
    GapReport gaps = uncertainty_gaps(joint, bound.flattened);
    out << "  H(joint)=" << detail::fmt("%.4f", shannon_entropy(joint))
        << "  gap H=" << detail::fmt("%.4f", gaps.shannon)
        << "  gap U=" << detail::fmt("%.4f", gaps.u);
    if (gaps.v) out << "  gap V=" << detail::fmt("%.4f", *gaps.v);
    out << "\n";
  }
  return 0;
}

}  // namespace majur
