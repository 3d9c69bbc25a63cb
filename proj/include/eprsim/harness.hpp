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

#ifndef EPRSIM_HARNESS_HPP
#define EPRSIM_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eprsim/validator.hpp"

namespace eprsim {

// Name of the deterministic sampler: std::mt19937_64 seeded directly, each
// uniform drawn as (next() >> 11) * 2^-53. Both halves are pinned by the
// C++ standard, so identical seeds give identical frequencies everywhere.
inline constexpr const char* kGeneratorName = "mt19937_64-u53";

struct RunConfig {
  enum class Mode { Exact, MonteCarlo };
  enum class Output { Table, Json };

  Mode mode = Mode::Exact;
  std::uint64_t samples = 100000;  // MonteCarlo only
  std::uint64_t seed = 0;          // MonteCarlo only
  std::optional<Velocity> frame;
  Output output = Output::Table;
};

//! Read and resolve a scenario file. Throws ParseError on malformed JSON,
//! SchemaError (with the JSON path) on shape problems, NormError when
//! explicit amplitudes are more than 1e-6 away from unit norm.
Scenario load_scenario(const std::string& path);

//! Same, from an already-parsed JSON value.
Scenario parse_scenario(const nlohmann::json& doc);

//! Canonical echo of a scenario (axes and amplitudes normalized).
nlohmann::ordered_json scenario_to_json(const Scenario& s);

struct QueryAnswer {
  Query query;
  std::optional<double> probability;  // empty iff error is set
  std::string error;
  std::vector<AccessibilityWarning> warnings;
};

struct FrequencyTable {
  std::string generator = kGeneratorName;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<std::string> order;
  std::map<std::string, double> frequencies;
  std::map<std::string, double> standard_errors;  // sqrt(p (1-p) / N), exact p
  double max_abs_deviation = 0.0;                 // max |freq - exact|
};

struct FrameReport {
  Velocity velocity;
  std::vector<Event> boosted_events;    // sorted by frame-local time
  std::vector<std::string> test_order;  // tests sorted by frame-local time
  // Pairs (lab-earlier, lab-later) whose order the frame reverses.
  std::vector<std::pair<std::string, std::string>> order_flips;
};

struct SweepRow {
  double theta;
  double expectation;
  std::optional<double> reference;  // -cos(theta), singlet scenarios only
};

struct SweepTable {
  Axis axis;
  bool singlet = false;  // when false, a NotSinglet warning applies
  std::vector<SweepRow> rows;
};

struct Report {
  Scenario scenario;
  std::vector<Violation> violations;
  LinearExtensions orderings;
  std::vector<OutcomeDistribution> distributions;
  std::vector<QueryAnswer> queries;
  std::optional<FrameReport> frame;
  std::optional<FrequencyTable> sampler;

  bool ok() const { return violations.empty(); }
};

//! Validate and execute. Invalid scenarios come back with violations and no
//! distributions. Exact mode enumerates every linear extension; Monte Carlo
//! mode additionally samples along the lab-frame time order and answers
//! queries from the sampled frequencies.
Report run_scenario(const Scenario& s, const RunConfig& cfg);

//! Chain sampling with the documented deterministic generator.
FrequencyTable montecarlo_sample(const Scenario& s,
                                 const std::vector<Test>& order,
                                 std::uint64_t samples, std::uint64_t seed);

//! Boosted event coordinates and frame-local test order under velocity v.
FrameReport frame_report(const Scenario& s, const Velocity& v);

//! Correlation E(a, b_i) against axes rotated away from `a` by
//! theta_i = i*pi/(steps-1) in a fixed plane through `a`.
SweepTable correlation_sweep(const Scenario& s, const Axis& a, int steps);

//! Tests sorted by lab-frame event time (ties by label).
std::vector<Test> lab_frame_order(const Scenario& s);

nlohmann::ordered_json report_to_json(const Report& r);
nlohmann::ordered_json frame_to_json(const FrameReport& fr);
nlohmann::ordered_json sweep_to_json(const SweepTable& sw);

std::string report_to_table(const Report& r);
std::string frame_to_table(const FrameReport& fr);
std::string sweep_to_table(const SweepTable& sw);

//! Structural check of a report JSON document against the published schema;
//! on failure returns false and, when `why` is non-null, names the problem.
bool report_schema_ok(const nlohmann::json& doc, std::string* why);

}  // namespace eprsim

#endif  // EPRSIM_HARNESS_HPP
