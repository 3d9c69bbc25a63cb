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

#include "eprsim/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

const Event* try_find_event(const Scenario& s, const std::string& label) {
  if (s.source.label == label) return &s.source;
  for (const Event& e : s.events) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

const Test* try_find_test(const Scenario& s, const std::string& label) {
  for (const Test& t : s.tests) {
    if (t.label == label) return &t;
  }
  return nullptr;
}

bool causally_comparable(const Event& a, const Event& b) {
  return in_forward_lightcone(a, b) || in_forward_lightcone(b, a);
}

}  // namespace

const Test& find_test(const Scenario& s, const std::string& label) {
  if (const Test* t = try_find_test(s, label)) return *t;
  throw UnknownReferenceError("unknown test " + quoted(label));
}

const Event& find_event(const Scenario& s, const std::string& label) {
  if (const Event* e = try_find_event(s, label)) return *e;
  throw UnknownReferenceError("unknown event " + quoted(label));
}

std::vector<Violation> validate(const Scenario& s) {
  std::vector<Violation> out;
  auto emit = [&out](const char* kind, std::string detail) {
    out.push_back(Violation{kind, std::move(detail)});
  };

  // Label uniqueness.
  std::set<std::string> particle_names;
  for (const Particle& p : s.particles) {
    if (!particle_names.insert(p.name).second) {
      emit(kDuplicateLabel, "duplicate particle name " + quoted(p.name));
    }
  }
  std::set<std::string> event_labels{s.source.label};
  for (const Event& e : s.events) {
    if (!event_labels.insert(e.label).second) {
      emit(kDuplicateLabel, "duplicate event label " + quoted(e.label));
    }
  }
  std::set<std::string> test_labels;
  for (const Test& t : s.tests) {
    if (!test_labels.insert(t.label).second) {
      emit(kDuplicateLabel, "duplicate test label " + quoted(t.label));
    }
  }

  // Reference resolution.
  for (const Test& t : s.tests) {
    if (!particle_names.count(t.particle)) {
      emit(kUnknownReference, "test " + quoted(t.label) +
                                  " references unknown particle " +
                                  quoted(t.particle));
    }
    if (!event_labels.count(t.event)) {
      emit(kUnknownReference, "test " + quoted(t.label) +
                                  " references unknown event " + quoted(t.event));
    }
  }
  for (const Query& q : s.queries) {
    std::vector<std::string> refs;
    for (const OutcomeRef& g : q.given) refs.push_back(g.test);
    refs.push_back(q.target.test);
    for (const std::string& label : refs) {
      if (!test_labels.count(label)) {
        emit(kUnknownReference, "query references unknown test " + quoted(label));
      }
    }
  }
  for (const std::string& name : s.initial_state.particles) {
    if (!particle_names.count(name)) {
      emit(kUnknownReference,
           "initial state references unknown particle " + quoted(name));
    }
  }

  // At most one test per (particle, event).
  std::map<std::pair<std::string, std::string>, std::string> seen_pair;
  for (const Test& t : s.tests) {
    auto key = std::make_pair(t.particle, t.event);
    auto [it, inserted] = seen_pair.emplace(key, t.label);
    if (!inserted && it->second != t.label) {
      std::string a = std::min(it->second, t.label);
      std::string b = std::max(it->second, t.label);
      emit(kDuplicateLabel, "tests " + quoted(a) + " and " + quoted(b) +
                                " both test particle " + quoted(t.particle) +
                                " at event " + quoted(t.event));
    }
  }

  // Geometry, for tests whose references resolve.
  std::map<std::string, std::vector<const Test*>> by_particle;
  for (const Test& t : s.tests) {
    const Event* e = try_find_event(s, t.event);
    if (e == nullptr || !particle_names.count(t.particle)) continue;

    // Every particle is created at the source; a massive particle cannot
    // reach a test event outside the source's closed forward cone.
    if (!in_forward_lightcone(s.source, *e)) {
      emit(kSourceCausalityViolation,
           "test " + quoted(t.label) + " at event " + quoted(t.event) +
               " lies outside the forward lightcone of source " +
               quoted(s.source.label));
    }
    by_particle[t.particle].push_back(&t);
  }

  // One particle, one worldline: all its test events must be pairwise
  // comparable, otherwise a second particle would have to exist.
  for (const auto& [particle, tests] : by_particle) {
    for (std::size_t i = 0; i < tests.size(); ++i) {
      for (std::size_t j = i + 1; j < tests.size(); ++j) {
        const Event& ei = *try_find_event(s, tests[i]->event);
        const Event& ej = *try_find_event(s, tests[j]->event);
        if (!causally_comparable(ei, ej)) {
          std::string a = std::min(tests[i]->label, tests[j]->label);
          std::string b = std::max(tests[i]->label, tests[j]->label);
          emit(kChargeConservationViolation,
               "tests " + quoted(a) + " and " + quoted(b) + " on particle " +
                   quoted(particle) + " occur at causally incomparable events");
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.kind, a.detail) < std::tie(b.kind, b.detail);
  });
  return out;
}

LinearExtensions linear_extensions(const Scenario& s) {
  if (!validate(s).empty()) {
    throw NotValidatedError(
        "linear_extensions: scenario does not validate cleanly");
  }

  // Tests in label order; ties in the partial order then come out
  // lexicographically.
  std::vector<const Test*> tests;
  for (const Test& t : s.tests) tests.push_back(&t);
  std::sort(tests.begin(), tests.end(),
            [](const Test* a, const Test* b) { return a->label < b->label; });

  const std::size_t n = tests.size();
  // before[i][j]: test i must precede test j. Strict part of the cone
  // relation, so coincident events impose no constraint.
  std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || tests[i]->event == tests[j]->event) continue;
      const Event& ei = find_event(s, tests[i]->event);
      const Event& ej = find_event(s, tests[j]->event);
      before[i][j] =
          in_forward_lightcone(ei, ej) && !in_forward_lightcone(ej, ei);
    }
  }

  LinearExtensions result;
  std::vector<bool> placed(n, false);
  std::vector<std::string> current;
  current.reserve(n);

  // Depth-first over ready tests; returns false once the cap is hit.
  auto extend = [&](auto&& self) -> bool {
    if (current.size() == n) {
      if (result.orders.size() >= kMaxExtensions) return false;
      result.orders.push_back(current);
      return true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!placed[j] && before[j][i]) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      placed[i] = true;
      current.push_back(tests[i]->label);
      const bool keep_going = self(self);
      current.pop_back();
      placed[i] = false;
      if (!keep_going) return false;
    }
    return true;
  };
  result.truncated = !extend(extend);
  return result;
}

std::vector<AccessibilityWarning> accessibility_warnings(const Scenario& s,
                                                         const Query& q) {
  const Test& target = find_test(s, q.target.test);
  const Event& target_event = find_event(s, target.event);

  std::vector<AccessibilityWarning> warnings;
  for (const OutcomeRef& g : q.given) {
    const Test& given = find_test(s, g.test);
    const Event& given_event = find_event(s, given.event);
    if (!in_forward_lightcone(given_event, target_event)) {
      warnings.push_back(AccessibilityWarning{
          kInaccessibleConditionWarning, target.label, given.label,
          "outcome of test " + quoted(given.label) +
              " is not in the causal past of test " + quoted(target.label)});
    }
  }
  return warnings;
}

}  // namespace eprsim
