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

#ifndef EPRSIM_REDUCTION_HPP
#define EPRSIM_REDUCTION_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eprsim/spin.hpp"

namespace eprsim {

// Branches whose probability falls at or below this threshold are recorded
// as exact zeros and never descended into.
inline constexpr double kPruneTol = 1e-14;

enum class Outcome : int { Plus = 1, Minus = -1 };

inline char to_char(Outcome o) { return o == Outcome::Plus ? '+' : '-'; }
Outcome outcome_from_char(char c);

// One projective spin measurement: which particle, along which axis, at
// which spacetime event (event label; geometry is resolved by the scenario).
struct Test {
  std::string label;
  std::string particle;
  Axis axis;
  std::string event;
};

// One of the two branches produced by a single test. `state` is normalized
// when probability > 0 and all-zero otherwise.
struct MeasurementBranch {
  Outcome outcome;
  double probability;
  JointState state;
};

// A leaf of the outcome tree of a test chain.
struct Branch {
  std::vector<std::pair<std::string, Outcome>> history;
  double probability;
  JointState state;
};

// Joint law of a test chain. Keys are '+'/'-' strings aligned with `order`;
// every outcome tuple is present, pruned branches as explicit zeros.
struct OutcomeDistribution {
  std::vector<std::string> order;
  std::map<std::string, double> table;
};

//! Von Neumann reduction of a single test: probabilities are Born-rule
//! quadratic forms p = Re<psi|P psi> clamped to [0, 1], post-states are
//! P psi / sqrt(p). The '+' branch comes first. Throws UnknownParticleError,
//! and DegenerateStateError when the input norm is off by more than 1e-8.
std::array<MeasurementBranch, 2> apply_test(const JointState& state,
                                            const Test& test);

//! Depth-first exact enumeration of the outcome tree, reducing in the given
//! order. Returns the surviving leaves (probability above kPruneTol).
std::vector<Branch> enumerate_branches(const JointState& state,
                                       const std::vector<Test>& tests);

//! Joint distribution over complete outcome tuples of the chain.
OutcomeDistribution run_chain(const JointState& state,
                              const std::vector<Test>& tests);

//! P(target | given) by exact summation over the joint table. Throws
//! ZeroConditionProbabilityError when P(given) <= kPruneTol.
double conditional(const OutcomeDistribution& dist,
                   const std::vector<std::pair<std::string, Outcome>>& given,
                   const std::pair<std::string, Outcome>& target);

//! Single-test marginal of the joint table.
std::map<Outcome, double> marginal(const OutcomeDistribution& dist,
                                   const std::string& test_label);

struct OrderInvariance {
  bool invariant;
  double max_deviation;
};

//! Runs the chain once per order, aligns tuples by test label and reports
//! the largest probability difference seen; invariant iff <= 1e-12. Orders
//! must be permutations of one test set (OrderMismatchError otherwise).
OrderInvariance order_invariance(const JointState& state,
                                 const std::vector<std::vector<Test>>& orders);

//! E[A.B] for one test along `a` on the first particle and one along `b` on
//! the second, from the exact two-test joint law.
double correlation(const JointState& state, const Axis& a, const Axis& b);

}  // namespace eprsim

#endif  // EPRSIM_REDUCTION_HPP
