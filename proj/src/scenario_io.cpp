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

#include <cmath>
#include <fstream>
#include <set>

#include "eprsim/errors.hpp"
#include "eprsim/harness.hpp"

namespace eprsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw SchemaError(path + ": " + why);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required field");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "expected a finite number");
  return d;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

Event parse_event(const json& v, const std::string& path) {
  return Event(as_string(field(v, "label", path), path + ".label"),
               as_number(field(v, "t", path), path + ".t"),
               as_number(field(v, "x", path), path + ".x"),
               as_number(field(v, "y", path), path + ".y"),
               as_number(field(v, "z", path), path + ".z"));
}

Axis parse_axis(const json& v, const std::string& path) {
  const json& arr = as_array(v, path);
  if (arr.size() != 3) fail(path, "expected exactly 3 components");
  const double nx = as_number(arr[0], path + "[0]");
  const double ny = as_number(arr[1], path + "[1]");
  const double nz = as_number(arr[2], path + "[2]");
  try {
    return Axis(nx, ny, nz);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Outcome parse_outcome(const json& v, const std::string& path) {
  const std::string s = as_string(v, path);
  if (s == "+") return Outcome::Plus;
  if (s == "-") return Outcome::Minus;
  fail(path, "expected \"+\" or \"-\"");
}

OutcomeRef parse_outcome_ref(const json& v, const std::string& path) {
  OutcomeRef ref;
  ref.test = as_string(field(v, "test", path), path + ".test");
  ref.outcome = parse_outcome(field(v, "outcome", path), path + ".outcome");
  return ref;
}

JointState parse_initial_state(const json& v, const Scenario& s,
                               const std::string& path, bool* is_token) {
  if (v.is_string()) {
    if (v.get<std::string>() != "singlet") {
      fail(path, "the only state token is \"singlet\"");
    }
    if (s.particles.size() != 2) {
      fail(path, "the \"singlet\" token requires exactly two particles");
    }
    *is_token = true;
    return singlet(s.particles[0].name, s.particles[1].name);
  }
  *is_token = false;

  JointState state;
  const json& order = as_array(field(v, "order", path), path + ".order");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::string name = as_string(order[i], path + ".order[" + std::to_string(i) + "]");
    if (!seen.insert(name).second) {
      fail(path + ".order", "duplicate particle name '" + name + "'");
    }
    state.particles.push_back(std::move(name));
  }
  if (state.particles.empty()) fail(path + ".order", "expected at least one particle");
  if (state.particles.size() > 20) fail(path + ".order", "too many particles");

  const json& amps = as_array(field(v, "amplitudes", path), path + ".amplitudes");
  const std::size_t want = std::size_t(1) << state.particles.size();
  if (amps.size() != want) {
    fail(path + ".amplitudes",
         "expected " + std::to_string(want) + " [re, im] pairs");
  }
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const std::string apath = path + ".amplitudes[" + std::to_string(i) + "]";
    const json& pair = as_array(amps[i], apath);
    if (pair.size() != 2) fail(apath, "expected [re, im]");
    state.amplitudes.emplace_back(as_number(pair[0], apath + "[0]"),
                                  as_number(pair[1], apath + "[1]"));
  }

  const double n = state_norm(state);
  if (std::abs(n - 1.0) > 1e-6) {
    throw NormError(path + ".amplitudes: norm " + std::to_string(n) +
                    " is not within 1e-6 of 1");
  }
  for (Amplitude& a : state.amplitudes) a /= n;
  return state;
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) fail("$", "expected a JSON object");

  Scenario s;
  s.schema = as_int(field(doc, "schema", "$"), "$.schema");
  if (s.schema != 1) fail("$.schema", "unsupported schema version");
  if (doc.contains("comment")) {
    s.comment = as_string(doc["comment"], "$.comment");
  }

  const json& particles = as_array(field(doc, "particles", "$"), "$.particles");
  for (std::size_t i = 0; i < particles.size(); ++i) {
    const std::string path = "$.particles[" + std::to_string(i) + "]";
    Particle p;
    p.name = as_string(field(particles[i], "name", path), path + ".name");
    p.species = as_string(field(particles[i], "species", path), path + ".species");
    p.charge = as_int(field(particles[i], "charge", path), path + ".charge");
    if (p.charge < -1 || p.charge > 1) {
      fail(path + ".charge", "charge must be -1, 0 or +1");
    }
    if (p.species == "electron" && p.charge != -1) {
      fail(path + ".charge", "an electron carries charge -1");
    }
    if (p.species == "positron" && p.charge != 1) {
      fail(path + ".charge", "a positron carries charge +1");
    }
    s.particles.push_back(std::move(p));
  }

  s.source = parse_event(field(doc, "source", "$"), "$.source");
  const json& events = as_array(field(doc, "events", "$"), "$.events");
  for (std::size_t i = 0; i < events.size(); ++i) {
    s.events.push_back(
        parse_event(events[i], "$.events[" + std::to_string(i) + "]"));
  }

  s.initial_state = parse_initial_state(field(doc, "initial_state", "$"), s,
                                        "$.initial_state", &s.singlet_token);

  const json& tests = as_array(field(doc, "tests", "$"), "$.tests");
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const std::string path = "$.tests[" + std::to_string(i) + "]";
    Test t;
    t.label = as_string(field(tests[i], "label", path), path + ".label");
    t.particle = as_string(field(tests[i], "particle", path), path + ".particle");
    t.axis = parse_axis(field(tests[i], "axis", path), path + ".axis");
    t.event = as_string(field(tests[i], "event", path), path + ".event");
    s.tests.push_back(std::move(t));
  }

  if (doc.contains("queries")) {
    const json& queries = as_array(doc["queries"], "$.queries");
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const std::string path = "$.queries[" + std::to_string(i) + "]";
      Query q;
      const json& given = as_array(field(queries[i], "given", path), path + ".given");
      for (std::size_t g = 0; g < given.size(); ++g) {
        q.given.push_back(parse_outcome_ref(
            given[g], path + ".given[" + std::to_string(g) + "]"));
      }
      q.target =
          parse_outcome_ref(field(queries[i], "target", path), path + ".target");
      s.queries.push_back(std::move(q));
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open scenario file '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(doc);
}

nlohmann::ordered_json scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json doc;
  doc["schema"] = s.schema;
  if (!s.comment.empty()) doc["comment"] = s.comment;

  doc["particles"] = nlohmann::ordered_json::array();
  for (const Particle& p : s.particles) {
    doc["particles"].push_back(
        {{"name", p.name}, {"species", p.species}, {"charge", p.charge}});
  }

  auto event_json = [](const Event& e) {
    return nlohmann::ordered_json{
        {"label", e.label}, {"t", e.t}, {"x", e.x}, {"y", e.y}, {"z", e.z}};
  };
  doc["source"] = event_json(s.source);
  doc["events"] = nlohmann::ordered_json::array();
  for (const Event& e : s.events) doc["events"].push_back(event_json(e));

  if (s.singlet_token) {
    doc["initial_state"] = "singlet";
  } else {
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    for (const Amplitude& a : s.initial_state.amplitudes) {
      amps.push_back({a.real(), a.imag()});
    }
    doc["initial_state"] = {{"amplitudes", std::move(amps)},
                            {"order", s.initial_state.particles}};
  }

  doc["tests"] = nlohmann::ordered_json::array();
  for (const Test& t : s.tests) {
    doc["tests"].push_back({{"label", t.label},
                            {"particle", t.particle},
                            {"axis", {t.axis.nx, t.axis.ny, t.axis.nz}},
                            {"event", t.event}});
  }

  doc["queries"] = nlohmann::ordered_json::array();
  for (const Query& q : s.queries) {
    nlohmann::ordered_json given = nlohmann::ordered_json::array();
    for (const OutcomeRef& g : q.given) {
      given.push_back(
          {{"test", g.test}, {"outcome", std::string(1, to_char(g.outcome))}});
    }
    doc["queries"].push_back(
        {{"given", std::move(given)},
         {"target",
          {{"test", q.target.test},
           {"outcome", std::string(1, to_char(q.target.outcome))}}}});
  }
  return doc;
}

}  // namespace eprsim
