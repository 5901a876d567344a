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

// Runs every gatesim command listed in the reproduction guide and compares
// its output against the expectation file named after it.
//
// usage: doc_check <gatesim binary> <reproduction.md>
//
// Commands are lines starting with "gatesim " inside ```sh blocks. A block may
// be followed by <!-- expect: path.json --> which applies to every command in it.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

struct DocCommand {
  std::string command;
  std::string expect;  // empty: exit status only
  int line = 0;
};

std::vector<DocCommand> parse_guide(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<DocCommand> out;
  std::string line;
  bool in_block = false;
  std::size_t block_begin = 0;
  int number = 0;
  const std::string marker = "<!-- expect:";
  while (std::getline(in, line)) {
    ++number;
    if (line.rfind("```", 0) == 0) {
      in_block = !in_block && line.rfind("```sh", 0) == 0;
      if (in_block) block_begin = out.size();
      continue;
    }
    if (in_block && line.rfind("gatesim ", 0) == 0) {
      out.push_back({line, "", number});
    } else if (!in_block && line.rfind(marker, 0) == 0) {
      std::string p = line.substr(marker.size());
      p = p.substr(0, p.find("-->"));
      p.erase(0, p.find_first_not_of(' '));
      p.erase(p.find_last_not_of(' ') + 1);
      for (std::size_t i = block_begin; i < out.size(); ++i) out[i].expect = p;
    }
  }
  return out;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured run(const std::string& cmd) {
  Captured c;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return c;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

// One check: compares `actual` with the spec (value + rel_tol/abs_tol, min,
// max, or equals).
bool check_value(const json& actual, const json& spec, std::string& why) {
  if (spec.contains("equals")) {
    if (actual != spec["equals"]) {
      why = "got " + actual.dump() + ", want " + spec["equals"].dump();
      return false;
    }
    return true;
  }
  if (!actual.is_number()) {
    why = "not a number: " + actual.dump();
    return false;
  }
  const double v = actual.get<double>();
  if (spec.contains("value")) {
    const double want = spec["value"].get<double>();
    double tol = 0.0;
    if (spec.contains("rel_tol")) tol = std::max(tol, spec["rel_tol"].get<double>() * std::abs(want));
    if (spec.contains("abs_tol")) tol = std::max(tol, spec["abs_tol"].get<double>());
    if (!(std::abs(v - want) <= tol)) {
      why = "got " + std::to_string(v) + ", want " + std::to_string(want) + " +/- " +
            std::to_string(tol);
      return false;
    }
  }
  if (spec.contains("min") && !(v >= spec["min"].get<double>())) {
    why = "got " + std::to_string(v) + " below " + spec["min"].dump();
    return false;
  }
  if (spec.contains("max") && !(v <= spec["max"].get<double>())) {
    why = "got " + std::to_string(v) + " above " + spec["max"].dump();
    return false;
  }
  return true;
}

bool verify_output(const std::string& output, const json& expect, std::string& why) {
  const std::string format = expect.value("format", "json");
  if (format == "json") {
    json doc;
    try {
      doc = json::parse(output);
    } catch (const std::exception& e) {
      why = std::string("output is not JSON: ") + e.what();
      return false;
    }
    for (const json& c : expect.at("checks")) {
      const json::json_pointer ptr(c.at("pointer").get<std::string>());
      if (!doc.contains(ptr)) {
        why = "missing " + ptr.to_string();
        return false;
      }
      if (!check_value(doc.at(ptr), c, why)) {
        why = ptr.to_string() + ": " + why;
        return false;
      }
    }
    return true;
  }
  if (format == "csv") {
    const auto rows = parse_csv(output);
    if (expect.contains("header") && (rows.empty() || rows[0].size() != expect["header"].size())) {
      why = "header mismatch";
      return false;
    }
    if (expect.contains("rows") && rows.size() != expect["rows"].get<std::size_t>() + 1) {
      why = "expected " + expect["rows"].dump() + " data rows, got " + std::to_string(rows.size() - 1);
      return false;
    }
    for (const json& c : expect.value("checks", json::array())) {
      const std::size_t r = c.at("row").get<std::size_t>() + 1;
      const std::size_t col = c.at("col").get<std::size_t>();
      if (r >= rows.size() || col >= rows[r].size()) {
        why = "cell out of range";
        return false;
      }
      if (!check_value(json(std::stod(rows[r][col])), c, why)) {
        why = "row " + std::to_string(r - 1) + " col " + std::to_string(col) + ": " + why;
        return false;
      }
    }
    if (expect.contains("non_increasing_col")) {
      const std::size_t col = expect["non_increasing_col"].get<std::size_t>();
      for (std::size_t r = 2; r < rows.size(); ++r) {
        if (std::stod(rows[r][col]) > std::stod(rows[r - 1][col])) {
          why = "column " + std::to_string(col) + " increases at row " + std::to_string(r - 1);
          return false;
        }
      }
    }
    return true;
  }
  why = "unknown format " + format;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: doc_check <gatesim> <reproduction.md>\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::string guide = argv[2];
  const std::filesystem::path root = std::filesystem::path(guide).parent_path().parent_path();
  std::vector<DocCommand> cmds;
  try {
    cmds = parse_guide(guide);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (cmds.empty()) {
    std::cerr << "no commands found in " << guide << "\n";
    return 1;
  }
  int failures = 0;
  for (const DocCommand& c : cmds) {
    const std::string shell = "cd '" + root.string() + "' && '" + binary + "'" + c.command.substr(7);
    const Captured got = run(shell);
    std::string why;
    bool ok = got.status == 0;
    if (!ok) why = "exit status " + std::to_string(got.status);
    if (ok && !c.expect.empty()) {
      std::ifstream ef(root / c.expect);
      if (!ef) {
        ok = false;
        why = "missing expectation file " + c.expect;
      } else {
        try {
          ok = verify_output(got.out, json::parse(ef), why);
        } catch (const std::exception& e) {
          ok = false;
          why = std::string("bad expectation file: ") + e.what();
        }
      }
    }
    if (!ok) ++failures;
    std::cout << (ok ? "ok    " : "FAIL  ") << "line " << c.line << ": " << c.command
              << (c.expect.empty() ? "" : "  [" + c.expect + "]") << (ok ? "" : "  -> " + why)
              << "\n";
  }
  std::cout << cmds.size() - failures << "/" << cmds.size() << " documented commands passed\n";
  return failures == 0 ? 0 : 1;
}
