// Copyright 2026 The eprsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// eprsim: deterministic simulator of sequential projective spin tests on a
// relativistic scenario. Exit codes: 0 success, 2 scenario invalid
// (violations reported), 1 I/O, parse, or internal error.

#include <array>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eprsim/errors.hpp"
#include "eprsim/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;

std::array<double, 3> parse_triple(const std::string& text,
                                   const std::string& flag) {
  std::array<double, 3> out{};
  std::istringstream in(text);
  char c1 = 0;
  char c2 = 0;
  if (!(in >> out[0] >> c1 >> out[1] >> c2 >> out[2]) || c1 != ',' ||
      c2 != ',' || !(in >> std::ws).eof()) {
    throw eprsim::Error(flag + " expects three comma-separated numbers, got '" +
                        text + "'");
  }
  return out;
}

void emit(const nlohmann::ordered_json& doc) {
  std::cout << doc.dump(2) << "\n";
}

int print_violations(const eprsim::Scenario& s,
                     const std::vector<eprsim::Violation>& violations,
                     bool json) {
  if (json) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["scenario"] = eprsim::scenario_to_json(s);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const eprsim::Violation& v : violations) {
      list.push_back({{"kind", v.kind}, {"detail", v.detail}});
    }
    doc["validation"] = {{"ok", violations.empty()},
                         {"violations", std::move(list)}};
    emit(doc);
  } else {
    if (violations.empty()) {
      std::cout << "validation: ok\n";
    } else {
      std::cout << "validation: INVALID\n";
      for (const eprsim::Violation& v : violations) {
        std::cout << "  " << v.kind << ": " << v.detail << "\n";
      }
    }
  }
  return violations.empty() ? kExitOk : kExitInvalid;
}

int cmd_validate(const std::string& path, bool json) {
  const eprsim::Scenario s = eprsim::load_scenario(path);
  return print_violations(s, eprsim::validate(s), json);
}

int cmd_run(const std::string& path, const eprsim::RunConfig& cfg) {
  const eprsim::Scenario s = eprsim::load_scenario(path);
  const eprsim::Report report = eprsim::run_scenario(s, cfg);
  if (cfg.output == eprsim::RunConfig::Output::Json) {
    emit(eprsim::report_to_json(report));
  } else {
    std::cout << eprsim::report_to_table(report);
  }
  return report.ok() ? kExitOk : kExitInvalid;
}

int cmd_orderings(const std::string& path, bool json) {
  const eprsim::Scenario s = eprsim::load_scenario(path);
  const auto violations = eprsim::validate(s);
  if (!violations.empty()) return print_violations(s, violations, json);

  const eprsim::LinearExtensions ext = eprsim::linear_extensions(s);
  if (json) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["orderings"] = {{"truncated", ext.truncated}, {"orders", ext.orders}};
    emit(doc);
  } else {
    std::cout << "orderings (" << ext.orders.size()
              << (ext.truncated ? ", truncated" : "") << "):\n";
    for (const auto& order : ext.orders) {
      std::cout << " ";
      for (const std::string& label : order) std::cout << " " << label;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_boost(const std::string& path, const std::string& frame, bool json) {
  const eprsim::Scenario s = eprsim::load_scenario(path);
  const auto violations = eprsim::validate(s);
  if (!violations.empty()) return print_violations(s, violations, json);

  const auto v = parse_triple(frame, "--frame");
  const eprsim::FrameReport fr =
      eprsim::frame_report(s, eprsim::Velocity(v[0], v[1], v[2]));
  if (json) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["frame"] = eprsim::frame_to_json(fr);
    emit(doc);
  } else {
    std::cout << eprsim::frame_to_table(fr);
  }
  return kExitOk;
}

int cmd_sweep(const std::string& path, const std::string& axis, int steps,
              bool json) {
  const eprsim::Scenario s = eprsim::load_scenario(path);
  const auto violations = eprsim::validate(s);
  if (!violations.empty()) return print_violations(s, violations, json);

  const auto a = parse_triple(axis, "--axis");
  const eprsim::SweepTable sweep =
      eprsim::correlation_sweep(s, eprsim::Axis(a[0], a[1], a[2]), steps);
  if (json) {
    emit(eprsim::sweep_to_json(sweep));
  } else {
    std::cout << eprsim::sweep_to_table(sweep);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sequential projective spin tests on an entangled pair in Minkowski "
      "spacetime: causal validation, exact reduction chains, deterministic "
      "sampling, frame analysis."};
  app.require_subcommand(1);

  std::string file;
  std::string output = "table";
  std::string mode = "exact";
  std::string frame;
  std::string axis;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  int steps = 13;

  auto* validate_cmd = app.add_subcommand("validate", "Check admissibility");
  validate_cmd->add_option("file", file, "scenario JSON file")->required();
  validate_cmd->add_option("--output", output, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* run_cmd = app.add_subcommand("run", "Validate and execute");
  run_cmd->add_option("file", file, "scenario JSON file")->required();
  run_cmd->add_option("--mode", mode, "exact|mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  run_cmd->add_option("--samples", samples, "Monte Carlo sample count");
  run_cmd->add_option("--seed", seed, "Monte Carlo seed");
  run_cmd->add_option("--frame", frame, "vx,vy,vz of an extra frame section");
  run_cmd->add_option("--output", output, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* orderings_cmd =
      app.add_subcommand("orderings", "List causally consistent test orders");
  orderings_cmd->add_option("file", file, "scenario JSON file")->required();
  orderings_cmd->add_option("--output", output, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* boost_cmd =
      app.add_subcommand("boost", "Event coordinates in a moving frame");
  boost_cmd->add_option("file", file, "scenario JSON file")->required();
  boost_cmd->add_option("--frame", frame, "vx,vy,vz")->required();
  boost_cmd->add_option("--output", output, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Correlation E(a, b) against rotation angle");
  sweep_cmd->add_option("file", file, "scenario JSON file")->required();
  sweep_cmd->add_option("--axis", axis, "nx,ny,nz")->required();
  sweep_cmd->add_option("--steps", steps, "angle count (>= 2)");
  sweep_cmd->add_option("--output", output, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);
  const bool json = output == "json";

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, json);
    if (run_cmd->parsed()) {
      eprsim::RunConfig cfg;
      cfg.mode = mode == "mc" ? eprsim::RunConfig::Mode::MonteCarlo
                              : eprsim::RunConfig::Mode::Exact;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.output = json ? eprsim::RunConfig::Output::Json
                        : eprsim::RunConfig::Output::Table;
      if (!frame.empty()) {
        const auto v = parse_triple(frame, "--frame");
        cfg.frame = eprsim::Velocity(v[0], v[1], v[2]);
      }
      return cmd_run(file, cfg);
    }
    if (orderings_cmd->parsed()) return cmd_orderings(file, json);
    if (boost_cmd->parsed()) return cmd_boost(file, frame, json);
    if (sweep_cmd->parsed()) return cmd_sweep(file, axis, steps, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::cerr << "error: no subcommand\n";
  return kExitError;
}
