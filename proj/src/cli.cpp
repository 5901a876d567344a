// Copyright 2026 The Gatesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatesim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "gatesim/budget.hpp"
#include "gatesim/config.hpp"
#include "gatesim/dj.hpp"
#include "gatesim/sequencer.hpp"
#include "gatesim/verification.hpp"

namespace gatesim {
namespace {

using ojson = nlohmann::ordered_json;

constexpr double kDefaultTolerance = 1e-10;
constexpr double kFullModeThreshold = 0.90;

double tolerance_from_env() {
  const char* raw = std::getenv("GATESIM_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v <= 0.0 || v >= 1.0) {
    throw ConfigError(std::string("GATESIM_TOL must be a number in (0, 1), got '") + raw + "'");
  }
  return v;
}

Preset preset_from(const std::string& path) {
  if (!path.empty()) return load_preset(path);
  Preset p;
  p.name = "builtin-cpw";
  p.params = cpw_defaults();
  return p;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw ConfigError("cannot write '" + output + "'");
  f << text;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ojson params_json(const DeviceParams& p) {
  ojson j;
  j["g"] = p.g;
  j["delta_c"] = p.delta_c;
  j["delta_ck"] = p.delta_ck;
  if (!p.omega_raman.empty()) j["omega_raman"] = p.omega_raman;
  j["omega_resonant"] = p.omega_resonant;
  j["gamma2_inv"] = p.gamma2_inv;
  j["quality_q"] = p.quality_q;
  j["nu_c"] = p.nu_c;
  return j;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string gate;
  std::size_t n = 0;
  std::string mode = "analytic";
  std::string params;
  std::string output;
  std::string truth_table;
  std::size_t cavity_dim = 0;
  std::optional<double> threshold;
  bool dump_sequence = false;
  bool idle_couplings = false;
  bool always_on = false;
  bool phase_audit = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const double tol = tolerance_from_env();
  const GateKind gate = parse_gate(a.gate);
  const Mode mode = parse_mode(a.mode);
  std::size_t n = a.n;
  if (gate == GateKind::CP3 || gate == GateKind::Toffoli) {
    if (n != 0 && n != 3) throw ConfigError(std::string(gate_name(gate)) + " is a three-qubit gate");
    n = 3;
  } else if (n == 0) {
    n = gate == GateKind::NCP ? 4 : 3;
  }
  const Preset preset = preset_from(a.params);
  const std::size_t cavity = a.cavity_dim ? a.cavity_dim : default_cavity_dim(mode);
  const PulseSequence seq = make_sequence(gate, n, preset.params, cavity);

  ReportOptions ro;
  ro.compose = {mode, a.idle_couplings, a.always_on};
  ro.tolerance = tol;
  const GateReport rep = report(seq, ro);
  const double threshold =
      a.threshold ? *a.threshold : (mode == Mode::SimulatedFull ? kFullModeThreshold : 1.0 - tol);
  bool pass = rep.process_fidelity >= threshold;
  if (mode == Mode::Analytic) pass = pass && rep.exact_phase_match;

  ojson j;
  j["command"] = "verify";
  j["preset"] = preset.name;
  j["report"] = report_json(rep);
  j["threshold"] = threshold;
  j["tolerance"] = tol;
  j["pass"] = pass;
  j["warnings"] = preset.params.regime_warnings(n);
  if (a.phase_audit) j["phase_audit"] = phase_audit_json(gatesim::phase_audit(seq));
  if (a.dump_sequence) j["sequence"] = sequence_json(seq);
  emit(dump_canonical(j) + "\n", a.output, out);

  if (!a.truth_table.empty()) {
    const std::vector<LabeledState> basis =
        gate == GateKind::NTCNOT ? control_target_basis(seq.reg) : computational_basis(seq.reg);
    emit(truth_table_csv(truth_table(seq, ro.compose, basis)), a.truth_table, out);
  }
  if (!pass) {
    err << "verify: fidelity " << format_number(rep.process_fidelity) << " below threshold "
        << format_number(threshold) << (rep.exact_phase_match ? "" : " or phases differ") << "\n";
  }
  return pass ? kExitOk : kExitThreshold;
}

// ------------------------------------------------------------------- budget

struct BudgetArgs {
  std::string params;
  std::string output;
  double threshold = 0.1;
  std::size_t ntcnot_n = 3;
  std::size_t ncp_n = 4;
};

int cmd_budget(const BudgetArgs& a, std::ostream& out, std::ostream& err) {
  const Preset preset = preset_from(a.params);
  const DeviceParams& p = preset.params;
  const double g0 = p.coupling(0);
  const double t3 = time_cp3(p);
  const double tn = time_ntcnot(p, a.ntcnot_n);
  const double kappa = cavity_lifetime(p.quality_q, p.nu_c);
  const Feasibility f = feasibility(p, a.threshold, a.ntcnot_n);

  ojson j;
  j["command"] = "budget";
  j["preset"] = preset.name;
  j["params"] = params_json(p);
  j["tau_cp3"] = t3;
  j["tau_cp3_us"] = t3 * 1e6;
  j["tau_cp3_in_pi_over_g"] = t3 * g0 / std::numbers::pi;
  j["tau_ntcnot"] = tn;
  j["tau_ntcnot_us"] = tn * 1e6;
  j["tau_ntcnot_in_pi_over_g"] = tn * g0 / std::numbers::pi;
  j["ntcnot_n"] = a.ntcnot_n;
  j["kappa_inv"] = kappa;
  j["kappa_inv_us"] = kappa * 1e6;
  j["gamma2_inv"] = p.gamma2_inv;

  ojson feas;
  feas["threshold"] = f.threshold;
  feas["pass"] = f.pass;
  ojson rows = ojson::array();
  for (const FeasibilityRow& r : f.rows) {
    ojson row;
    row["gate"] = r.gate;
    row["duration"] = r.duration;
    row["ratio_relaxation"] = r.ratio_relaxation;
    row["ratio_cavity"] = r.ratio_cavity;
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
  }
  feas["rows"] = rows;
  j["feasibility"] = feas;

  ojson steps;
  steps["cp3"] = {{"paper", step_count(Scheme::NCP, 3, Convention::Paper)},
                  {"grouped", step_count(Scheme::NCP, 3, Convention::Grouped)}};
  steps["ncp"] = {{"n", a.ncp_n},
                  {"paper", step_count(Scheme::NCP, a.ncp_n, Convention::Paper)},
                  {"grouped", step_count(Scheme::NCP, a.ncp_n, Convention::Grouped)},
                  {"conventional", *conventional_steps(Scheme::NCP, a.ncp_n)}};
  steps["toffoli"] = {{"steps", step_count(Scheme::Toffoli, 3, Convention::Grouped)},
                      {"conventional", *conventional_steps(Scheme::Toffoli, 3)}};
  steps["ntcnot"] = {{"steps", step_count(Scheme::NTCNOT, a.ntcnot_n, Convention::Grouped)}};
  j["step_counts"] = steps;

  const PulseSequence cp3 = cp3_sequence(p);
  const double tau_r = primitive_duration(PrimitiveKind::R, p, 0);
  ojson phase;
  phase["condition_ratio"] = condition_ratio(p, cp3.reg);
  phase["negligible"] = condition_ratio(p, cp3.reg) > kNegligibleRatio;
  phase["unwanted_phase_per_r_step"] =
      p.coupling(2) * p.coupling(2) * tau_r / p.target_detuning(2);
  j["phase_condition"] = phase;

  if (preset.squid) j["squid"] = squid_coupling_json(*preset.squid);
  if (preset.levels) {
    const LevelCheck lc = validate_levels(*preset.levels);
    j["levels"] = {{"qubit_type", qubit_type_name(preset.levels->type)},
                   {"pass", lc.pass},
                   {"violated", lc.violated}};
  }
  if (!preset.reference.is_null()) j["reference"] = preset.reference;
  emit(dump_canonical(j) + "\n", a.output, out);
  if (!f.pass) err << "budget: a gate exceeds " << format_number(a.threshold) << " of a lifetime\n";
  return f.pass ? kExitOk : kExitThreshold;
}

// -------------------------------------------------------------------- sweep

struct SweepArgs {
  std::string param;
  std::string observable;
  std::string params;
  std::string output;
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 5;
  std::size_t threads = 0;
};

DeviceParams with_param(DeviceParams p, const std::string& name, double value) {
  if (name == "delta_ratio") {
    p.delta_c = value * p.coupling(0);
    p.delta_ck.clear();
    for (std::size_t q = 0; q < p.g.size(); ++q) p.delta_ck.push_back(value * p.g[q]);
  } else if (name == "omega_ratio") {
    p.omega_resonant = value * p.coupling(0);
  } else if (name == "q_factor") {
    p.quality_q = value;
  } else {
    throw ConfigError("unknown sweep parameter '" + name + "'");
  }
  p.validate();
  return p;
}

double observe(const DeviceParams& p, const std::string& obs) {
  if (obs == "tau_cp3") return time_cp3(p);
  if (obs == "tau_ntcnot") return time_ntcnot(p);
  if (obs == "kappa_inv") return cavity_lifetime(p.quality_q, p.nu_c);
  if (obs == "leakage3") return g1_peak_level3(p, 3);
  if (obs == "fidelity_full") {
    ReportOptions ro;
    ro.compose = {Mode::SimulatedFull, false, false};
    ro.samples_per_segment = 1;
    return report(cp3_sequence(p, default_cavity_dim(Mode::SimulatedFull)), ro).process_fidelity;
  }
  throw ConfigError("unknown observable '" + obs + "'");
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream&) {
  if (a.points == 0) throw ConfigError("--points must be at least 1");
  if (a.points > 1 && !(a.to > a.from)) throw ConfigError("sweep range must be increasing");
  const Preset preset = preset_from(a.params);
  // Validate names before spawning workers.
  (void)with_param(preset.params, a.param, a.from);
  if (a.observable != "tau_cp3" && a.observable != "tau_ntcnot" && a.observable != "kappa_inv" &&
      a.observable != "leakage3" && a.observable != "fidelity_full") {
    throw ConfigError("unknown observable '" + a.observable + "'");
  }

  std::vector<double> xs(a.points);
  for (std::size_t i = 0; i < a.points; ++i) {
    xs[i] = a.points == 1 ? a.from
                          : a.from + (a.to - a.from) * static_cast<double>(i) /
                                         static_cast<double>(a.points - 1);
  }
  std::vector<double> ys(a.points);
  std::vector<std::string> errors(a.points);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < a.points; i = next++) {
      try {
        ys[i] = observe(with_param(preset.params, a.param, xs[i]), a.observable);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::size_t nthreads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, a.points);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const std::string& e : errors) {
    if (!e.empty()) throw ConfigError("sweep point failed: " + e);
  }

  std::ostringstream csv;
  csv << a.param << ',' << a.observable << '\n';
  for (std::size_t i = 0; i < a.points; ++i) {
    csv << format_number(xs[i]) << ',' << format_number(ys[i]) << '\n';
  }
  emit(csv.str(), a.output, out);
  return kExitOk;
}

// ----------------------------------------------------------------------- dj

struct DjArgs {
  int variant = 0;
  std::string mode = "analytic";
  std::string params;
  std::string output;
};

int cmd_dj(const DjArgs& a, std::ostream& out, std::ostream& err) {
  const double tol = tolerance_from_env();
  const Mode mode = parse_mode(a.mode);
  const Preset preset = preset_from(a.params);
  const DjResult r = run_dj(a.variant, preset.params, mode);
  const bool pass = r.correct() && (mode == Mode::SimulatedFull || r.probability >= 1.0 - tol);
  ojson j = dj_json(r, mode);
  j["tolerance"] = tol;
  j["pass"] = pass;
  emit(dump_canonical(j) + "\n", a.output, out);
  if (!pass) err << "dj: variant " << a.variant << " not classified deterministically\n";
  return pass ? kExitOk : kExitThreshold;
}

// ------------------------------------------------------------------ squid-g

struct SquidArgs {
  std::string params;
  std::string output;
};

int cmd_squid(const SquidArgs& a, std::ostream& out, std::ostream&) {
  SquidParams sq;
  std::string name = "builtin-squid";
  std::optional<LevelStructure> levels;
  ojson reference;
  if (!a.params.empty()) {
    const Preset preset = load_preset(a.params);
    if (!preset.squid) throw ConfigError("'" + a.params + "' has no squid block");
    sq = *preset.squid;
    name = preset.name;
    levels = preset.levels;
    reference = preset.reference;
  }
  ojson j;
  j["command"] = "squid-g";
  j["preset"] = name;
  const ojson coupling = squid_coupling_json(sq);
  for (const auto& [k, v] : coupling.items()) j[k] = v;
  if (levels) {
    const LevelCheck lc = validate_levels(*levels);
    j["levels"] = {{"qubit_type", qubit_type_name(levels->type)},
                   {"pass", lc.pass},
                   {"violated", lc.violated}};
  }
  if (!reference.is_null()) j["reference"] = reference;
  emit(dump_canonical(j) + "\n", a.output, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cavity-QED multiqubit gate simulator"};
  app.name("gatesim");
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Compose a gate and compare it with the ideal unitary");
  verify->add_option("gate", va.gate, "cp3 | ncp | ntcnot | toffoli")->required();
  verify->add_option("-n", va.n, "Number of qubits (ncp, ntcnot)");
  verify->add_option("--mode", va.mode, "analytic | simulated_effective | simulated_full");
  verify->add_option("--params", va.params, "Parameter preset (JSON)");
  verify->add_option("--cavity-dim", va.cavity_dim, "Fock states kept (default 2, 3 for full)");
  verify->add_option("--threshold", va.threshold, "Minimum process fidelity");
  verify->add_option("--output", va.output, "Write the report here instead of stdout");
  verify->add_option("--truth-table", va.truth_table, "Write the truth table as CSV");
  verify->add_flag("--dump-sequence", va.dump_sequence, "Include the pulse list in the report");
  verify->add_flag("--idle-couplings", va.idle_couplings,
                   "Effective mode: keep dispersive shifts of idle qubits");
  verify->add_flag("--always-on-couplings", va.always_on,
                   "Full mode: keep every qubit's cavity coupling on throughout");
  verify->add_flag("--phase-audit", va.phase_audit, "Include the unwanted-phase audit");

  BudgetArgs ba;
  auto* budget = app.add_subcommand("budget", "Gate times, lifetimes and step counts");
  budget->add_option("--params", ba.params, "Parameter preset (JSON)");
  budget->add_option("--output", ba.output, "Write the report here instead of stdout");
  budget->add_option("--threshold", ba.threshold, "Largest allowed gate time / lifetime ratio");
  budget->add_option("--ntcnot-n", ba.ntcnot_n, "Qubits of the multi-target CNOT");
  budget->add_option("--ncp-n", ba.ncp_n, "Qubits of the controlled phase step count");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Scan one parameter and print CSV");
  sweep->add_option("param", sa.param, "delta_ratio | omega_ratio | q_factor")->required();
  sweep->add_option("--from", sa.from, "First value")->required();
  sweep->add_option("--to", sa.to, "Last value")->required();
  sweep->add_option("--points", sa.points, "Number of points");
  sweep->add_option("--observable", sa.observable,
                    "fidelity_full | leakage3 | tau_cp3 | tau_ntcnot | kappa_inv")
      ->required();
  sweep->add_option("--params", sa.params, "Parameter preset (JSON)");
  sweep->add_option("--output", sa.output, "Write the CSV here instead of stdout");
  sweep->add_option("--threads", sa.threads, "Worker threads (default: all cores)");

  DjArgs da;
  auto* dj = app.add_subcommand("dj", "Two-qubit Deutsch-Jozsa run");
  dj->add_option("--variant", da.variant, "Oracle 1..4")->required();
  dj->add_option("--mode", da.mode, "analytic | simulated_effective | simulated_full");
  dj->add_option("--params", da.params, "Parameter preset (JSON)");
  dj->add_option("--output", da.output, "Write the result here instead of stdout");

  SquidArgs qa;
  auto* squid = app.add_subcommand("squid-g", "SQUID-cavity coupling constant");
  squid->add_option("--params", qa.params, "Preset with a squid block (JSON)");
  squid->add_option("--output", qa.output, "Write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*verify) return cmd_verify(va, out, err);
    if (*budget) return cmd_budget(ba, out, err);
    if (*sweep) return cmd_sweep(sa, out, err);
    if (*dj) return cmd_dj(da, out, err);
    if (*squid) return cmd_squid(qa, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace gatesim
