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

#include "eprsim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<Test> resolve_order(const Scenario& s,
                                const std::vector<std::string>& labels) {
  std::vector<Test> order;
  order.reserve(labels.size());
  for (const std::string& label : labels) order.push_back(find_test(s, label));
  return order;
}

std::vector<std::pair<std::string, Outcome>> as_pairs(
    const std::vector<OutcomeRef>& refs) {
  std::vector<std::pair<std::string, Outcome>> out;
  out.reserve(refs.size());
  for (const OutcomeRef& r : refs) out.emplace_back(r.test, r.outcome);
  return out;
}

QueryAnswer answer_query(const Scenario& s, const Query& q,
                         const OutcomeDistribution& dist) {
  QueryAnswer qa;
  qa.query = q;
  qa.warnings = accessibility_warnings(s, q);
  try {
    qa.probability =
        conditional(dist, as_pairs(q.given), {q.target.test, q.target.outcome});
  } catch (const ZeroConditionProbabilityError&) {
    qa.error = "ZeroConditionProbability";
  }
  return qa;
}

}  // namespace

std::vector<Test> lab_frame_order(const Scenario& s) {
  std::vector<Test> order = s.tests;
  std::sort(order.begin(), order.end(), [&s](const Test& a, const Test& b) {
    const double ta = find_event(s, a.event).t;
    const double tb = find_event(s, b.event).t;
    return std::tie(ta, a.label) < std::tie(tb, b.label);
  });
  return order;
}

FrequencyTable montecarlo_sample(const Scenario& s,
                                 const std::vector<Test>& order,
                                 std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error("montecarlo_sample: samples must be >= 1");

  const OutcomeDistribution exact = run_chain(s.initial_state, order);

  std::mt19937_64 gen(seed);
  auto uniform01 = [&gen]() { return double(gen() >> 11) * 0x1.0p-53; };

  std::map<std::string, std::uint64_t> counts;
  for (const auto& [key, p] : exact.table) counts[key] = 0;

  std::string key(order.size(), '+');
  for (std::uint64_t i = 0; i < samples; ++i) {
    JointState state = s.initial_state;
    for (std::size_t t = 0; t < order.size(); ++t) {
      auto branches = apply_test(state, order[t]);
      const bool plus = uniform01() < branches[0].probability;
      MeasurementBranch& picked = plus ? branches[0] : branches[1];
      key[t] = to_char(picked.outcome);
      state = std::move(picked.state);
    }
    ++counts[key];
  }

  FrequencyTable table;
  table.seed = seed;
  table.samples = samples;
  table.order = exact.order;
  for (const auto& [tuple, count] : counts) {
    const double freq = double(count) / double(samples);
    const double p = exact.table.at(tuple);
    table.frequencies[tuple] = freq;
    table.standard_errors[tuple] = std::sqrt(p * (1.0 - p) / double(samples));
    table.max_abs_deviation = std::max(table.max_abs_deviation, std::abs(freq - p));
  }
  return table;
}

FrameReport frame_report(const Scenario& s, const Velocity& v) {
  FrameReport fr;
  fr.velocity = v;

  fr.boosted_events.push_back(boost(s.source, v));
  for (const Event& e : s.events) fr.boosted_events.push_back(boost(e, v));
  std::sort(fr.boosted_events.begin(), fr.boosted_events.end(),
            [](const Event& a, const Event& b) {
              return std::tie(a.t, a.label) < std::tie(b.t, b.label);
            });

  const std::vector<Test> lab = lab_frame_order(s);
  std::vector<Test> boosted = s.tests;
  auto boosted_time = [&s, &v](const Test& t) {
    return boost(find_event(s, t.event), v).t;
  };
  std::sort(boosted.begin(), boosted.end(),
            [&](const Test& a, const Test& b) {
              const double ta = boosted_time(a);
              const double tb = boosted_time(b);
              return std::tie(ta, a.label) < std::tie(tb, b.label);
            });
  for (const Test& t : boosted) fr.test_order.push_back(t.label);

  auto position = [](const std::vector<std::string>& seq, const std::string& l) {
    return std::size_t(std::find(seq.begin(), seq.end(), l) - seq.begin());
  };
  std::vector<std::string> lab_labels;
  for (const Test& t : lab) lab_labels.push_back(t.label);
  for (std::size_t i = 0; i < lab_labels.size(); ++i) {
    for (std::size_t j = i + 1; j < lab_labels.size(); ++j) {
      if (position(fr.test_order, lab_labels[i]) >
          position(fr.test_order, lab_labels[j])) {
        fr.order_flips.emplace_back(lab_labels[i], lab_labels[j]);
      }
    }
  }
  return fr;
}

SweepTable correlation_sweep(const Scenario& s, const Axis& a, int steps) {
  if (steps < 2) throw Error("correlation_sweep: need at least 2 steps");
  if (s.initial_state.particles.size() != 2) {
    throw Error("correlation_sweep: scenario must have exactly two particles");
  }

  const JointState reference =
      singlet(s.initial_state.particles[0], s.initial_state.particles[1]);
  const double fidelity = std::abs(state_inner(reference, s.initial_state));

  SweepTable sweep;
  sweep.axis = a;
  sweep.singlet = fidelity > 1.0 - 1e-10;

  // A fixed in-plane partner: unit vector orthogonal to `a`.
  const bool use_x = std::abs(a.nz) > 0.9;
  const double rx = use_x ? 1.0 : 0.0;
  const double rz = use_x ? 0.0 : 1.0;
  const double proj = rx * a.nx + rz * a.nz;
  Axis u(rx - proj * a.nx, -proj * a.ny, rz - proj * a.nz);

  const double pi = std::acos(-1.0);
  for (int i = 0; i < steps; ++i) {
    const double theta = double(i) * pi / double(steps - 1);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    const Axis b(c * a.nx + sn * u.nx, c * a.ny + sn * u.ny, c * a.nz + sn * u.nz);

    SweepRow row;
    row.theta = theta;
    row.expectation = correlation(s.initial_state, a, b);
    if (sweep.singlet) row.reference = -c;
    sweep.rows.push_back(row);
  }
  return sweep;
}

Report run_scenario(const Scenario& s, const RunConfig& cfg) {
  Report report;
  report.scenario = s;
  report.violations = validate(s);
  if (!report.ok()) return report;

  report.orderings = linear_extensions(s);
  for (const auto& labels : report.orderings.orders) {
    if (labels.empty()) continue;
    report.distributions.push_back(
        run_chain(s.initial_state, resolve_order(s, labels)));
  }

  const OutcomeDistribution* query_dist =
      report.distributions.empty() ? nullptr : &report.distributions.front();

  OutcomeDistribution sampled;
  if (cfg.mode == RunConfig::Mode::MonteCarlo && !s.tests.empty()) {
    report.sampler =
        montecarlo_sample(s, lab_frame_order(s), cfg.samples, cfg.seed);
    sampled.order = report.sampler->order;
    sampled.table = report.sampler->frequencies;
    query_dist = &sampled;
  }

  for (const Query& q : s.queries) {
    if (query_dist == nullptr) {
      throw Error("run_scenario: query without any tests");  // unreachable after validate
    }
    report.queries.push_back(answer_query(s, q, *query_dist));
  }

  if (cfg.frame) report.frame = frame_report(s, *cfg.frame);
  return report;
}

nlohmann::ordered_json frame_to_json(const FrameReport& fr) {
  nlohmann::ordered_json doc;
  doc["velocity"] = {fr.velocity.vx, fr.velocity.vy, fr.velocity.vz};
  doc["events"] = nlohmann::ordered_json::array();
  for (const Event& e : fr.boosted_events) {
    doc["events"].push_back(nlohmann::ordered_json{
        {"label", e.label}, {"t", e.t}, {"x", e.x}, {"y", e.y}, {"z", e.z}});
  }
  doc["test_order"] = fr.test_order;
  doc["order_flips"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : fr.order_flips) doc["order_flips"].push_back({a, b});
  return doc;
}

nlohmann::ordered_json sweep_to_json(const SweepTable& sw) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["axis"] = {sw.axis.nx, sw.axis.ny, sw.axis.nz};
  doc["singlet"] = sw.singlet;
  if (!sw.singlet) doc["warning"] = "NotSinglet";
  doc["rows"] = nlohmann::ordered_json::array();
  for (const SweepRow& row : sw.rows) {
    nlohmann::ordered_json r{{"theta", row.theta},
                             {"expectation", row.expectation}};
    if (row.reference) r["reference"] = *row.reference;
    doc["rows"].push_back(std::move(r));
  }
  return doc;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["scenario"] = scenario_to_json(r.scenario);

  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  }
  doc["validation"] = {{"ok", r.ok()}, {"violations", std::move(violations)}};
  if (!r.ok()) return doc;

  doc["orderings"] = {{"truncated", r.orderings.truncated},
                      {"orders", r.orderings.orders}};

  doc["distributions"] = nlohmann::ordered_json::array();
  for (const OutcomeDistribution& d : r.distributions) {
    doc["distributions"].push_back({{"order", d.order}, {"table", d.table}});
  }

  doc["queries"] = nlohmann::ordered_json::array();
  for (const QueryAnswer& qa : r.queries) {
    nlohmann::ordered_json given = nlohmann::ordered_json::array();
    for (const OutcomeRef& g : qa.query.given) {
      given.push_back(
          {{"test", g.test}, {"outcome", std::string(1, to_char(g.outcome))}});
    }
    nlohmann::ordered_json entry;
    entry["given"] = std::move(given);
    entry["target"] = {{"test", qa.query.target.test},
                       {"outcome", std::string(1, to_char(qa.query.target.outcome))}};
    if (qa.probability) {
      entry["probability"] = *qa.probability;
    } else {
      entry["probability"] = nullptr;
      entry["error"] = qa.error;
    }
    entry["warnings"] = nlohmann::ordered_json::array();
    for (const AccessibilityWarning& w : qa.warnings) {
      entry["warnings"].push_back({{"kind", w.kind},
                                   {"target", w.target},
                                   {"given", w.given},
                                   {"message", w.message}});
    }
    doc["queries"].push_back(std::move(entry));
  }

  if (r.frame) doc["frame"] = frame_to_json(*r.frame);

  if (r.sampler) {
    const FrequencyTable& ft = *r.sampler;
    doc["sampler"] = {{"generator", ft.generator},
                      {"seed", ft.seed},
                      {"samples", ft.samples},
                      {"order", ft.order},
                      {"frequencies", ft.frequencies},
                      {"standard_errors", ft.standard_errors},
                      {"max_abs_deviation", ft.max_abs_deviation}};
  }
  return doc;
}

std::string frame_to_table(const FrameReport& fr) {
  std::ostringstream out;
  out << "frame velocity: (" << fmt(fr.velocity.vx) << ", " << fmt(fr.velocity.vy)
      << ", " << fmt(fr.velocity.vz) << ")\n";
  out << "events by frame time:\n";
  for (const Event& e : fr.boosted_events) {
    out << "  " << e.label << "  t=" << fmt(e.t) << "  x=" << fmt(e.x)
        << "  y=" << fmt(e.y) << "  z=" << fmt(e.z) << "\n";
  }
  out << "test order:";
  for (const std::string& l : fr.test_order) out << " " << l;
  out << "\n";
  if (fr.order_flips.empty()) {
    out << "order flips: none\n";
  } else {
    out << "order flips (lab-earlier first):\n";
    for (const auto& [a, b] : fr.order_flips) {
      out << "  " << a << " <-> " << b << "\n";
    }
  }
  return out.str();
}

std::string sweep_to_table(const SweepTable& sw) {
  std::ostringstream out;
  out << "correlation sweep, axis (" << fmt(sw.axis.nx) << ", " << fmt(sw.axis.ny)
      << ", " << fmt(sw.axis.nz) << ")\n";
  if (!sw.singlet) {
    out << "warning: NotSinglet - initial state is not the singlet, no "
           "reference column\n";
  }
  out << (sw.singlet ? "  theta          E          -cos(theta)\n"
                     : "  theta          E\n");
  for (const SweepRow& row : sw.rows) {
    out << "  " << fmt(row.theta) << "\t" << fmt(row.expectation);
    if (row.reference) out << "\t" << fmt(*row.reference);
    out << "\n";
  }
  return out.str();
}

std::string report_to_table(const Report& r) {
  std::ostringstream out;
  if (!r.scenario.comment.empty()) {
    out << "scenario: " << r.scenario.comment << "\n";
  }

  if (!r.ok()) {
    out << "validation: INVALID\n";
    for (const Violation& v : r.violations) {
      out << "  " << v.kind << ": " << v.detail << "\n";
    }
    return out.str();
  }
  out << "validation: ok\n";

  out << "orderings (" << r.orderings.orders.size()
      << (r.orderings.truncated ? ", truncated" : "") << "):\n";
  for (const auto& order : r.orderings.orders) {
    out << " ";
    for (const std::string& l : order) out << " " << l;
    out << "\n";
  }

  for (const OutcomeDistribution& d : r.distributions) {
    out << "distribution [";
    for (std::size_t i = 0; i < d.order.size(); ++i) {
      out << (i ? " " : "") << d.order[i];
    }
    out << "]:\n";
    for (const auto& [key, p] : d.table) {
      out << "  " << key << "  " << fmt(p) << "\n";
    }
  }

  for (const QueryAnswer& qa : r.queries) {
    out << "query P(" << qa.query.target.test << "=" << to_char(qa.query.target.outcome);
    if (!qa.query.given.empty()) {
      out << " |";
      for (std::size_t i = 0; i < qa.query.given.size(); ++i) {
        out << (i ? ", " : " ") << qa.query.given[i].test << "="
            << to_char(qa.query.given[i].outcome);
      }
    }
    out << ") = ";
    if (qa.probability) {
      out << fmt(*qa.probability) << "\n";
    } else {
      out << "undefined (" << qa.error << ")\n";
    }
    for (const AccessibilityWarning& w : qa.warnings) {
      out << "  warning: " << w.message << "\n";
    }
  }

  if (r.frame) out << frame_to_table(*r.frame);

  if (r.sampler) {
    const FrequencyTable& ft = *r.sampler;
    out << "sampler " << ft.generator << ", seed " << ft.seed << ", samples "
        << ft.samples << ":\n";
    for (const auto& [key, f] : ft.frequencies) {
      out << "  " << key << "  " << fmt(f) << "  (stderr "
          << fmt(ft.standard_errors.at(key)) << ")\n";
    }
    out << "  max |freq - exact| = " << fmt(ft.max_abs_deviation) << "\n";
  }
  return out.str();
}

bool report_schema_ok(const nlohmann::json& doc, std::string* why) {
  auto complain = [why](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };

  if (!doc.is_object()) return complain("report must be an object");
  if (!doc.contains("schema") || doc["schema"] != 1) {
    return complain("schema must be 1");
  }
  if (!doc.contains("scenario") || !doc["scenario"].is_object()) {
    return complain("missing scenario echo");
  }
  if (!doc.contains("validation") || !doc["validation"].is_object() ||
      !doc["validation"].contains("ok") ||
      !doc["validation"]["ok"].is_boolean() ||
      !doc["validation"].contains("violations") ||
      !doc["validation"]["violations"].is_array()) {
    return complain("malformed validation section");
  }

  const bool ok = doc["validation"]["ok"].get<bool>();
  for (const auto& v : doc["validation"]["violations"]) {
    if (!v.is_object() || !v.contains("kind") || !v.contains("detail")) {
      return complain("malformed violation entry");
    }
  }
  if (!ok) {
    if (doc.contains("distributions")) {
      return complain("invalid scenarios must not carry distributions");
    }
    return true;
  }

  if (!doc.contains("orderings") || !doc["orderings"].contains("orders")) {
    return complain("missing orderings section");
  }
  if (!doc.contains("distributions") || !doc["distributions"].is_array()) {
    return complain("missing distributions section");
  }
  for (const auto& d : doc["distributions"]) {
    if (!d.contains("order") || !d.contains("table") || !d["table"].is_object()) {
      return complain("malformed distribution entry");
    }
    const std::size_t arity = d["order"].size();
    for (const auto& [key, value] : d["table"].items()) {
      if (key.size() != arity) return complain("tuple arity mismatch in table");
      if (!value.is_number()) return complain("table probabilities must be numbers");
      const double p = value.get<double>();
      if (p < 0.0 || p > 1.0) return complain("probability out of [0, 1]");
    }
  }
  if (!doc.contains("queries") || !doc["queries"].is_array()) {
    return complain("missing queries section");
  }
  for (const auto& q : doc["queries"]) {
    if (!q.contains("target") || !q.contains("probability") ||
        !q.contains("warnings")) {
      return complain("malformed query entry");
    }
    if (!q["probability"].is_null()) {
      const double p = q["probability"].get<double>();
      if (p < 0.0 || p > 1.0) return complain("query probability out of [0, 1]");
    } else if (!q.contains("error")) {
      return complain("null query probability requires an error field");
    }
  }
  if (doc.contains("sampler")) {
    const auto& ft = doc["sampler"];
    if (!ft.contains("generator") || !ft.contains("seed") ||
        !ft.contains("samples") || !ft.contains("frequencies") ||
        !ft.contains("standard_errors") || !ft.contains("max_abs_deviation")) {
      return complain("malformed sampler section");
    }
  }
  if (doc.contains("frame")) {
    const auto& fr = doc["frame"];
    if (!fr.contains("velocity") || !fr.contains("events") ||
        !fr.contains("test_order") || !fr.contains("order_flips")) {
      return complain("malformed frame section");
    }
  }
  return true;
}

}  // namespace eprsim
