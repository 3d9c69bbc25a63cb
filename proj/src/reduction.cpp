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

#include "eprsim/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

constexpr double kNormTol = 1e-8;
constexpr std::size_t kMaxChainTests = 20;  // 2^20-entry tables at most

void check_chain_preconditions(const std::vector<Test>& tests) {
  if (tests.empty()) {
    throw Error("run_chain: test list must be non-empty");
  }
  if (tests.size() > kMaxChainTests) {
    throw Error("run_chain: too many tests for exact enumeration");
  }
  std::set<std::string> labels;
  for (const Test& t : tests) {
    if (!labels.insert(t.label).second) {
      throw DuplicateLabelError("run_chain: duplicate test label '" + t.label + "'");
    }
  }
}

}  // namespace

Outcome outcome_from_char(char c) {
  if (c == '+') return Outcome::Plus;
  if (c == '-') return Outcome::Minus;
  throw Error(std::string("outcome must be '+' or '-', got '") + c + "'");
}

std::array<MeasurementBranch, 2> apply_test(const JointState& state,
                                            const Test& test) {
  const std::size_t n = state.particles.size();
  const std::size_t pos = particle_index(state.particles, test.particle);
  if (std::abs(state_norm(state) - 1.0) > kNormTol) {
    throw DegenerateStateError("apply_test: input state is not normalized");
  }

  std::array<MeasurementBranch, 2> branches{
      MeasurementBranch{Outcome::Plus, 0.0, state},
      MeasurementBranch{Outcome::Minus, 0.0, state}};

  for (MeasurementBranch& br : branches) {
    const SpinOperator proj = projector(test.axis, int(br.outcome));
    std::vector<Amplitude> projected =
        apply_to_particle(proj, pos, n, state.amplitudes);

    double p = std::real(inner(state.amplitudes, projected));
    p = std::clamp(p, 0.0, 1.0);
    br.probability = p;

    if (p > kPruneTol) {
      const double scale = 1.0 / std::sqrt(p);
      for (Amplitude& a : projected) a *= scale;
      br.state.amplitudes = std::move(projected);
    } else {
      br.probability = 0.0;
      br.state.amplitudes.assign(state.amplitudes.size(), Amplitude{});
    }
  }
  return branches;
}

std::vector<Branch> enumerate_branches(const JointState& state,
                                       const std::vector<Test>& tests) {
  check_chain_preconditions(tests);

  std::vector<Branch> leaves;
  std::vector<Branch> stack;
  stack.push_back(Branch{{}, 1.0, state});

  while (!stack.empty()) {
    Branch node = std::move(stack.back());
    stack.pop_back();

    if (node.history.size() == tests.size()) {
      leaves.push_back(std::move(node));
      continue;
    }

    const Test& test = tests[node.history.size()];
    // Push '-' first so '+' is expanded first: leaves come out in
    // lexicographic '+' < '-' order per level.
    auto branches = apply_test(node.state, test);
    for (int i = 1; i >= 0; --i) {
      const MeasurementBranch& br = branches[std::size_t(i)];
      if (br.probability <= kPruneTol) continue;
      Branch child;
      child.history = node.history;
      child.history.emplace_back(test.label, br.outcome);
      child.probability = node.probability * br.probability;
      child.state = br.state;
      stack.push_back(std::move(child));
    }
  }
  return leaves;
}

OutcomeDistribution run_chain(const JointState& state,
                              const std::vector<Test>& tests) {
  check_chain_preconditions(tests);

  OutcomeDistribution dist;
  for (const Test& t : tests) dist.order.push_back(t.label);

  // All 2^k tuples appear in the table; pruned ones stay at zero.
  const std::size_t k = tests.size();
  for (std::size_t bits = 0; bits < (std::size_t(1) << k); ++bits) {
    std::string key(k, '+');
    for (std::size_t i = 0; i < k; ++i) {
      if (bits & (std::size_t(1) << (k - 1 - i))) key[i] = '-';
    }
    dist.table[key] = 0.0;
  }

  for (const Branch& leaf : enumerate_branches(state, tests)) {
    std::string key;
    key.reserve(k);
    for (const auto& [label, outcome] : leaf.history) key.push_back(to_char(outcome));
    dist.table[key] += leaf.probability;
  }
  return dist;
}

namespace {

std::size_t label_position(const OutcomeDistribution& dist,
                           const std::string& label) {
  for (std::size_t i = 0; i < dist.order.size(); ++i) {
    if (dist.order[i] == label) return i;
  }
  throw UnknownTestError("unknown test label '" + label + "' in distribution");
}

}  // namespace

double conditional(const OutcomeDistribution& dist,
                   const std::vector<std::pair<std::string, Outcome>>& given,
                   const std::pair<std::string, Outcome>& target) {
  std::vector<std::pair<std::size_t, char>> fixed;
  fixed.reserve(given.size());
  for (const auto& [label, outcome] : given) {
    fixed.emplace_back(label_position(dist, label), to_char(outcome));
  }
  const std::size_t target_pos = label_position(dist, target.first);
  const char target_char = to_char(target.second);

  double p_given = 0.0;
  double p_joint = 0.0;
  for (const auto& [key, p] : dist.table) {
    bool match = true;
    for (const auto& [pos, c] : fixed) {
      if (key[pos] != c) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    p_given += p;
    if (key[target_pos] == target_char) p_joint += p;
  }

  if (p_given <= kPruneTol) {
    throw ZeroConditionProbabilityError(
        "conditional: conditioning outcomes have probability zero");
  }
  return p_joint / p_given;
}

std::map<Outcome, double> marginal(const OutcomeDistribution& dist,
                                   const std::string& test_label) {
  const std::size_t pos = label_position(dist, test_label);
  std::map<Outcome, double> m{{Outcome::Plus, 0.0}, {Outcome::Minus, 0.0}};
  for (const auto& [key, p] : dist.table) {
    m[key[pos] == '+' ? Outcome::Plus : Outcome::Minus] += p;
  }
  return m;
}

OrderInvariance order_invariance(const JointState& state,
                                 const std::vector<std::vector<Test>>& orders) {
  if (orders.empty()) {
    throw Error("order_invariance: need at least one order");
  }

  // Every order must cover the same labelled tests.
  auto signature = [](const std::vector<Test>& order) {
    std::vector<std::string> labels;
    for (const Test& t : order) labels.push_back(t.label);
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  const auto reference = signature(orders.front());
  for (const auto& order : orders) {
    if (signature(order) != reference) {
      throw OrderMismatchError(
          "order_invariance: orders are not permutations of one test set");
    }
  }

  std::vector<OutcomeDistribution> dists;
  dists.reserve(orders.size());
  for (const auto& order : orders) dists.push_back(run_chain(state, order));

  // Align tuples on the first order's label sequence.
  const auto& base = dists.front();
  double max_dev = 0.0;
  for (std::size_t d = 1; d < dists.size(); ++d) {
    std::vector<std::size_t> pos;  // base order label -> position in dists[d]
    pos.reserve(base.order.size());
    for (const std::string& label : base.order) {
      pos.push_back(label_position(dists[d], label));
    }
    for (const auto& [key, p] : base.table) {
      std::string other_key(key.size(), '?');
      for (std::size_t i = 0; i < key.size(); ++i) other_key[pos[i]] = key[i];
      max_dev = std::max(max_dev, std::abs(p - dists[d].table.at(other_key)));
    }
  }
  return OrderInvariance{max_dev <= 1e-12, max_dev};
}

double correlation(const JointState& state, const Axis& a, const Axis& b) {
  if (state.particles.size() != 2) {
    throw Error("correlation: state must have exactly two particles");
  }
  const std::vector<Test> tests{
      Test{"first", state.particles[0], a, ""},
      Test{"second", state.particles[1], b, ""},
  };
  const OutcomeDistribution dist = run_chain(state, tests);

  double e = 0.0;
  for (const auto& [key, p] : dist.table) {
    const double sa = key[0] == '+' ? 1.0 : -1.0;
    const double sb = key[1] == '+' ? 1.0 : -1.0;
    e += sa * sb * p;
  }
  return e;
}

}  // namespace eprsim
