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

#ifndef EPRSIM_VALIDATOR_HPP
#define EPRSIM_VALIDATOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "eprsim/reduction.hpp"
#include "eprsim/spacetime.hpp"

namespace eprsim {

struct Particle {
  std::string name;
  std::string species;  // "electron" (charge -1) or "positron" (charge +1)
  int charge = 0;
};

struct OutcomeRef {
  std::string test;
  Outcome outcome = Outcome::Plus;
};

// A conditional probability question over a test chain.
struct Query {
  std::vector<OutcomeRef> given;
  OutcomeRef target;
};

// A full experiment: particles created at `source`, a set of labelled
// events, one projective test per (particle, event) at most, and queries.
struct Scenario {
  int schema = 1;
  std::string comment;
  std::vector<Particle> particles;
  Event source;
  std::vector<Event> events;
  bool singlet_token = true;  // initial_state was given as "singlet"
  JointState initial_state;
  std::vector<Test> tests;
  std::vector<Query> queries;
};

// Stable violation vocabulary (these exact strings appear in reports).
inline constexpr const char* kChargeConservationViolation =
    "ChargeConservationViolation";
inline constexpr const char* kSourceCausalityViolation =
    "SourceCausalityViolation";
inline constexpr const char* kUnknownReference = "UnknownReference";
inline constexpr const char* kDuplicateLabel = "DuplicateLabel";

struct Violation {
  std::string kind;
  std::string detail;
};

//! Physical admissibility check. Emits SourceCausalityViolation for tests
//! outside the source's closed forward lightcone, and
//! ChargeConservationViolation when two tests on the same particle sit at
//! causally incomparable events (the particle's worldline cannot visit
//! both). Broken references and duplicate labels come back as violations,
//! not exceptions. Empty result means the scenario is admissible.
std::vector<Violation> validate(const Scenario& s);

inline constexpr std::size_t kMaxExtensions = 10000;

struct LinearExtensions {
  std::vector<std::vector<std::string>> orders;  // test labels
  bool truncated = false;
};

//! Every total order of the tests consistent with the causal partial order
//! of their events, lexicographic by label at each free choice, capped at
//! kMaxExtensions. Throws NotValidatedError on an inadmissible scenario.
LinearExtensions linear_extensions(const Scenario& s);

inline constexpr const char* kInaccessibleConditionWarning =
    "CausallyInaccessibleCondition";

struct AccessibilityWarning {
  std::string kind;  // kInaccessibleConditionWarning
  std::string target;
  std::string given;
  std::string message;
};

//! For each conditioning test whose event is outside the closed past
//! lightcone of the target's event, a warning that the condition's outcome
//! is causally inaccessible where the target runs. Never blocks execution.
std::vector<AccessibilityWarning> accessibility_warnings(const Scenario& s,
                                                         const Query& q);

//! Lookup helpers; throw UnknownReferenceError.
const Test& find_test(const Scenario& s, const std::string& label);
const Event& find_event(const Scenario& s, const std::string& label);

}  // namespace eprsim

#endif  // EPRSIM_VALIDATOR_HPP
