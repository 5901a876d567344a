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

#include "gatesim/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace gatesim {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const char* block) {
  if (!j.is_object()) throw ConfigError(std::string(block) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key '" + key + "' in " + block);
    }
  }
}

double number(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError("'" + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError("'" + key + "' must be finite");
  return d;
}

std::optional<double> maybe(const json& j, const std::string& key) {
  if (!j.contains(key)) return std::nullopt;
  return number(j, key);
}

std::vector<double> numbers(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (v.is_number()) return {number(j, key)};
  if (!v.is_array() || v.empty()) {
    throw ConfigError("'" + key + "' must be a number or a non-empty array of numbers");
  }
  std::vector<double> out;
  for (const json& e : v) {
    if (!e.is_number()) throw ConfigError("'" + key + "' entries must be numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

double scalar_g(const std::vector<double>& g) { return g.front(); }

double round_number(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::stod(buf);
}

}  // namespace

DeviceParams parse_device(const json& j) {
  reject_unknown(j,
                 {"g", "g_over_pi", "delta_c", "delta_ck", "delta_ratio", "omega_raman",
                  "omega_resonant", "omega_ratio", "raman_drive_phase", "gamma2_inv",
                  "quality_q", "nu_c", "second_order_detuning"},
                 "device");
  DeviceParams p;
  try {
    if (j.contains("g") && j.contains("g_over_pi")) {
      throw ConfigError("give either 'g' or 'g_over_pi', not both");
    }
    if (j.contains("g")) {
      p.g = numbers(j, "g");
    } else if (j.contains("g_over_pi")) {
      p.g = numbers(j, "g_over_pi");
      for (double& g : p.g) g *= std::numbers::pi;
    } else {
      throw ConfigError("device block is missing 'g' (or 'g_over_pi')");
    }
    for (double g : p.g) {
      if (!(g > 0.0) || !std::isfinite(g)) throw ConfigError("coupling g must be positive");
    }
    const double g0 = scalar_g(p.g);

    if (auto d = maybe(j, "delta_c")) {
      p.delta_c = *d;
    } else if (auto r = maybe(j, "delta_ratio")) {
      p.delta_c = *r * g0;
    } else {
      throw ConfigError("device block needs 'delta_c' or 'delta_ratio'");
    }
    if (j.contains("delta_ck")) {
      p.delta_ck = numbers(j, "delta_ck");
    } else if (auto r = maybe(j, "delta_ratio")) {
      p.delta_ck.clear();
      for (double g : p.g) p.delta_ck.push_back(*r * g);
    } else {
      p.delta_ck = {p.delta_c};
    }
    if (j.contains("omega_raman")) p.omega_raman = numbers(j, "omega_raman");

    if (auto o = maybe(j, "omega_resonant")) {
      p.omega_resonant = *o;
    } else if (auto r = maybe(j, "omega_ratio")) {
      p.omega_resonant = *r * g0;
    } else {
      throw ConfigError("device block needs 'omega_resonant' or 'omega_ratio'");
    }
    if (auto v = maybe(j, "raman_drive_phase")) p.raman_drive_phase = *v;
    if (auto v = maybe(j, "gamma2_inv")) p.gamma2_inv = *v;
    if (auto v = maybe(j, "quality_q")) p.quality_q = *v;
    if (auto v = maybe(j, "nu_c")) p.nu_c = *v;
    if (auto v = maybe(j, "second_order_detuning"); v && *v != 0.0) {
      throw ConfigError("only a zero second-order detuning is supported");
    }
    p.validate();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("device block: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("device block: ") + e.what());
  }
  return p;
}

SquidParams parse_squid(const json& j) {
  reject_unknown(j,
                 {"junction_capacitance", "loop_inductance", "damping_resistance", "beta_l",
                  "external_flux", "phi32", "loop_area", "cavity_volume", "cavity_frequency",
                  "antinode_factor"},
                 "squid");
  SquidParams s;
  try {
    s.loop_inductance = number(j, "loop_inductance");
    s.phi32 = number(j, "phi32");
    s.loop_area = number(j, "loop_area");
    s.cavity_volume = number(j, "cavity_volume");
    s.cavity_frequency = number(j, "cavity_frequency");
    if (auto v = maybe(j, "junction_capacitance")) s.junction_capacitance = *v;
    if (auto v = maybe(j, "damping_resistance")) s.damping_resistance = *v;
    if (auto v = maybe(j, "beta_l")) s.beta_l = *v;
    if (auto v = maybe(j, "external_flux")) s.external_flux = *v;
    if (auto v = maybe(j, "antinode_factor")) s.antinode_factor = *v;
    s.validate();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("squid block: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("squid block: ") + e.what());
  }
  return s;
}

LevelStructure parse_levels(const json& j) {
  reject_unknown(j, {"qubit_type", "nu10", "nu21", "nu32", "nu20", "nu30", "nu31"}, "levels");
  LevelStructure ls;
  try {
    if (!j.contains("qubit_type") || !j.at("qubit_type").is_string()) {
      throw ConfigError("levels block needs a 'qubit_type' string");
    }
    ls.type = parse_qubit_type(j.at("qubit_type").get<std::string>());
    ls.nu10 = maybe(j, "nu10");
    ls.nu21 = maybe(j, "nu21");
    ls.nu32 = maybe(j, "nu32");
    ls.nu20 = maybe(j, "nu20");
    ls.nu30 = maybe(j, "nu30");
    ls.nu31 = maybe(j, "nu31");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("levels block: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("levels block: ") + e.what());
  }
  return ls;
}

Preset parse_preset(const json& j) {
  reject_unknown(j, {"name", "description", "device", "squid", "levels", "reference"}, "preset");
  if (!j.contains("device")) throw ConfigError("preset is missing the 'device' block");
  Preset p;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ConfigError("'name' must be a string");
    p.name = j.at("name").get<std::string>();
  }
  p.params = parse_device(j.at("device"));
  if (j.contains("squid")) p.squid = parse_squid(j.at("squid"));
  if (j.contains("levels")) p.levels = parse_levels(j.at("levels"));
  if (j.contains("reference")) {
    p.reference = nlohmann::ordered_json::parse(j.at("reference").dump());
  }
  return p;
}

Preset load_preset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open parameter file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_preset(j);
}

DeviceParams cpw_defaults() {
  DeviceParams p = DeviceParams::uniform(std::numbers::pi * 440e6, 10.0, 10.0);
  p.gamma2_inv = 1e-6;
  p.quality_q = 1e5;
  p.nu_c = 3e9;
  return p;
}

nlohmann::ordered_json canonical(const nlohmann::ordered_json& j) {
  if (j.is_number_float()) return round_number(j.get<double>());
  if (j.is_object()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [k, v] : j.items()) out[k] = canonical(v);
    return out;
  }
  if (j.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& v : j) out.push_back(canonical(v));
    return out;
  }
  return j;
}

std::string dump_canonical(const nlohmann::ordered_json& j) { return canonical(j).dump(2); }

}  // namespace gatesim
