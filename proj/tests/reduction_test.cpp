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

#include <cmath>
#include <random>

#include <doctest.h>

#include "eprsim/errors.hpp"

using namespace eprsim;

namespace {

const Axis kI(1, 0, 0);
const Axis kJ(0, 1, 0);
const Axis kK(0, 0, 1);

Test make_test(const std::string& label, const std::string& particle,
               const Axis& axis) {
  return Test{label, particle, axis, label};
}

Axis random_axis(std::mt19937& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    const double x = normal(gen), y = normal(gen), z = normal(gen);
    if (x * x + y * y + z * z > 1e-6) return Axis(x, y, z);
  }
}

JointState random_pair_state(std::mt19937& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  JointState s;
  s.particles = {"e", "p"};
  s.amplitudes.resize(4);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& a : s.amplitudes) {
      a = Amplitude(normal(gen), normal(gen));
      norm2 += std::norm(a);
    }
  } while (norm2 < 1e-6);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : s.amplitudes) a *= inv;
  return s;
}

// E(a, b) for the singlet from the closed-form eigenbasis inner products,
// independent of the projector/reduction path.
double closed_form_correlation(const Axis& a, const Axis& b) {
  const Eigenbasis ba = eigenbasis(a);
  const Eigenbasis bb = eigenbasis(b);
  const JointState psi = singlet("e", "p");
  double e = 0.0;
  for (int sa : {+1, -1}) {
    for (int sb : {+1, -1}) {
      const SpinState& va = sa > 0 ? ba.plus : ba.minus;
      const SpinState& vb = sb > 0 ? bb.plus : bb.minus;
      const std::vector<Amplitude> product{
          va.up * vb.up, va.up * vb.down, va.down * vb.up, va.down * vb.down};
      const Amplitude overlap = inner(product, psi.amplitudes);
      e += sa * sb * std::norm(overlap);
    }
  }
  return e;
}

}  // namespace

TEST_CASE("apply_test splits the singlet evenly and anti-correlates") {
  const JointState psi = singlet("e", "p");
  const auto branches = apply_test(psi, make_test("A", "e", kK));

  CHECK(branches[0].outcome == Outcome::Plus);
  CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(branches[1].probability == doctest::Approx(0.5).epsilon(1e-12));

  // '+' branch is e_k^+ (x) p_k^-; '-' branch is e_k^- (x) p_k^+ with the
  // sign the reduction rule inherits from the singlet amplitude.
  CHECK(std::abs(branches[0].state.amplitudes[1] - Amplitude(1, 0)) <= 1e-12);
  CHECK(std::abs(branches[0].state.amplitudes[0]) <= 1e-12);
  CHECK(std::abs(branches[1].state.amplitudes[2] - Amplitude(-1, 0)) <= 1e-12);
}

TEST_CASE("apply_test on an eigenstate repeats with certainty") {
  JointState s;
  s.particles = {"e", "p"};
  s.amplitudes = {0, Amplitude(1, 0), 0, 0};  // e_k^+ (x) p_k^-

  const auto branches = apply_test(s, make_test("A", "e", kK));
  CHECK(branches[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(branches[1].probability == 0.0);
  CHECK(std::abs(branches[0].state.amplitudes[1] - Amplitude(1, 0)) <= 1e-12);
}

TEST_CASE("apply_test mixes non-commuting axes evenly") {
  const Eigenbasis j = eigenbasis(kJ);
  JointState s;
  s.particles = {"e", "p"};
  s.amplitudes = {j.plus.up, j.plus.down, 0, 0};  // e_k^+ (x) p_j^+

  const auto branches = apply_test(s, make_test("E", "p", kK));
  CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("apply_test rejects bad inputs") {
  const JointState psi = singlet("e", "p");
  CHECK_THROWS_AS(apply_test(psi, make_test("A", "mu", kK)),
                  UnknownParticleError);

  JointState off = psi;
  off.amplitudes[1] *= 2.0;
  CHECK_THROWS_AS(apply_test(off, make_test("A", "e", kK)),
                  DegenerateStateError);
}

TEST_CASE("run_chain reproduces the worked joint tables") {
  const JointState psi = singlet("e", "p");

  SUBCASE("single electron test") {
    const auto dist = run_chain(psi, {make_test("A", "e", kK)});
    CHECK(dist.table.at("+") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist.table.at("-") == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("same-axis pair is perfectly anti-correlated") {
    const auto dist =
        run_chain(psi, {make_test("A", "e", kK), make_test("B2", "p", kK)});
    CHECK(dist.table.at("+-") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist.table.at("-+") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist.table.at("++") == 0.0);
    CHECK(dist.table.at("--") == 0.0);
  }

  SUBCASE("intermediate j test spreads all eight tuples evenly") {
    const auto dist =
        run_chain(psi, {make_test("B", "p", kJ), make_test("A", "e", kK),
                        make_test("E", "p", kK)});
    REQUIRE(dist.table.size() == 8);
    for (const auto& [tuple, p] : dist.table) {
      CHECK(p == doctest::Approx(0.125).epsilon(1e-12));
    }
  }
}

TEST_CASE("conditional reproduces the headline probabilities") {
  const JointState psi = singlet("e", "p");

  SUBCASE("with the intermediate test the answer is one half") {
    const auto dist =
        run_chain(psi, {make_test("B", "p", kJ), make_test("A", "e", kK),
                        make_test("E", "p", kK)});
    const double p =
        conditional(dist, {{"A", Outcome::Plus}}, {"E", Outcome::Plus});
    CHECK(std::abs(p - 0.5) <= 1e-12);
  }

  SUBCASE("without it the answer is zero") {
    const auto dist =
        run_chain(psi, {make_test("A", "e", kK), make_test("E", "p", kK)});
    const double p =
        conditional(dist, {{"A", Outcome::Plus}}, {"E", Outcome::Plus});
    CHECK(p == 0.0);
  }

  SUBCASE("conditioning on a zero-probability branch is an error") {
    JointState minus;
    minus.particles = {"e", "p"};
    minus.amplitudes = {0, 0, Amplitude(1, 0), 0};  // e_k^- (x) p_k^+
    const auto dist =
        run_chain(minus, {make_test("A", "e", kK), make_test("E", "p", kK)});
    CHECK_THROWS_AS(
        conditional(dist, {{"A", Outcome::Plus}}, {"E", Outcome::Plus}),
        ZeroConditionProbabilityError);
  }
}

TEST_CASE("marginal sums out the other tests") {
  const JointState psi = singlet("e", "p");

  const auto jk =
      run_chain(psi, {make_test("A", "e", kK), make_test("B", "p", kJ)});
  auto m = marginal(jk, "B");
  CHECK(m.at(Outcome::Plus) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.at(Outcome::Minus) == doctest::Approx(0.5).epsilon(1e-12));

  const auto solo = run_chain(psi, {make_test("A", "e", kK)});
  m = marginal(solo, "A");
  CHECK(m.at(Outcome::Plus) == doctest::Approx(0.5).epsilon(1e-12));

  const auto kk =
      run_chain(psi, {make_test("A", "e", kK), make_test("B2", "p", kK)});
  m = marginal(kk, "B2");
  CHECK(m.at(Outcome::Plus) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(marginal(kk, "zz"), UnknownTestError);
}

TEST_CASE("order_invariance separates commuting from non-commuting chains") {
  const JointState psi = singlet("e", "p");
  const Test a = make_test("A", "e", kK);
  const Test b = make_test("B", "p", kJ);
  const Test e = make_test("E", "p", kK);

  SUBCASE("distinct particles commute") {
    const auto r = order_invariance(psi, {{a, b}, {b, a}});
    CHECK(r.invariant);
    CHECK(r.max_deviation <= 1e-12);
  }

  SUBCASE("identical orders trivially agree") {
    const auto r = order_invariance(psi, {{a}, {a}});
    CHECK(r.invariant);
    CHECK(r.max_deviation == 0.0);
  }

  SUBCASE("singlet symmetry hides the j/k order dependence") {
    // For the rotation-invariant singlet both same-particle orders give the
    // uniform table, so the deviation vanishes despite non-commuting axes.
    const auto r = order_invariance(psi, {{b, e}, {e, b}});
    CHECK(r.invariant);
    CHECK(r.max_deviation <= 1e-12);
  }

  SUBCASE("a product state exposes the same-particle order dependence") {
    JointState up;
    up.particles = {"e", "p"};
    up.amplitudes = {Amplitude(1, 0), 0, 0, 0};  // e_k^+ (x) p_k^+
    const auto r = order_invariance(up, {{b, e}, {e, b}});
    CHECK_FALSE(r.invariant);
    CHECK(r.max_deviation == doctest::Approx(0.25).epsilon(1e-10));
  }

  SUBCASE("non-permutations are rejected") {
    CHECK_THROWS_AS(order_invariance(psi, {{a, b}, {a, e}}),
                    OrderMismatchError);
    CHECK_THROWS_AS(order_invariance(psi, {{a, b}, {a}}), OrderMismatchError);
  }
}

TEST_CASE("correlation on worked axis pairs") {
  const JointState psi = singlet("e", "p");
  CHECK(std::abs(correlation(psi, kK, kK) + 1.0) <= 1e-10);
  CHECK(std::abs(correlation(psi, kK, kJ)) <= 1e-10);

  const double pi = std::acos(-1.0);
  for (const double theta : {pi / 6, pi / 4, pi / 3}) {
    const Axis b(std::sin(theta), 0.0, std::cos(theta));
    CHECK(std::abs(correlation(psi, kK, b) + std::cos(theta)) <= 1e-9);
  }
}

TEST_CASE("probability is conserved along random chains") {
  std::mt19937 gen(71);
  for (int trial = 0; trial < 50; ++trial) {
    const JointState s = random_pair_state(gen);

    const auto branches = apply_test(s, make_test("T", "e", random_axis(gen)));
    CHECK(std::abs(branches[0].probability + branches[1].probability - 1.0) <=
          1e-10);

    const auto dist =
        run_chain(s, {make_test("A", "e", random_axis(gen)),
                      make_test("B", "p", random_axis(gen)),
                      make_test("C", "p", random_axis(gen))});
    double total = 0.0;
    for (const auto& [tuple, p] : dist.table) {
      CHECK(p >= 0.0);
      total += p;
    }
    CHECK(std::abs(total - 1.0) <= 1e-10);
  }
}

TEST_CASE("repeating a test yields the same outcome with certainty") {
  std::mt19937 gen(73);
  for (int trial = 0; trial < 50; ++trial) {
    const JointState s = random_pair_state(gen);
    const Axis n = random_axis(gen);
    const auto dist =
        run_chain(s, {make_test("T1", "p", n), make_test("T2", "p", n)});
    CHECK(dist.table.at("+-") <= 1e-12);
    CHECK(dist.table.at("-+") <= 1e-12);
  }
}

TEST_CASE("tests on distinct particles commute for every state") {
  std::mt19937 gen(79);
  for (int trial = 0; trial < 50; ++trial) {
    const JointState s = random_pair_state(gen);
    const Test a = make_test("A", "e", random_axis(gen));
    const Test b = make_test("B", "p", random_axis(gen));
    const auto r = order_invariance(s, {{a, b}, {b, a}});
    CHECK(r.invariant);
  }
}

TEST_CASE("no-signaling: the positron marginal ignores the electron test") {
  const JointState psi = singlet("e", "p");
  const Test positron = make_test("B", "p", kJ);

  const auto alone = run_chain(psi, {positron});
  CHECK(std::abs(alone.table.at("+") - 0.5) <= 1e-12);

  const double pi = std::acos(-1.0);
  for (int i = 0; i < 36; ++i) {
    const double theta = i * pi / 18.0;
    const Axis n(std::sin(theta) * std::cos(3 * theta),
                 std::sin(theta) * std::sin(3 * theta), std::cos(theta));
    const auto dist = run_chain(psi, {make_test("A", "e", n), positron});
    const auto m = marginal(dist, "B");
    CHECK(std::abs(m.at(Outcome::Plus) - 0.5) <= 1e-12);
    CHECK(std::abs(m.at(Outcome::Minus) - 0.5) <= 1e-12);
  }
}

TEST_CASE("singlet correlation follows -a.b") {
  std::mt19937 gen(83);
  const JointState psi = singlet("e", "p");
  for (int trial = 0; trial < 100; ++trial) {
    const Axis a = random_axis(gen);
    const Axis b = random_axis(gen);
    const double e = correlation(psi, a, b);
    CHECK(std::abs(e + dot(a, b)) <= 1e-9);
    CHECK(std::abs(e - closed_form_correlation(a, b)) <= 1e-9);
  }
}

TEST_CASE("enumerate_branches prunes zero branches but tables keep them") {
  JointState up;
  up.particles = {"e", "p"};
  up.amplitudes = {Amplitude(1, 0), 0, 0, 0};

  const auto leaves = enumerate_branches(
      up, {make_test("A", "e", kK), make_test("B", "p", kK)});
  REQUIRE(leaves.size() == 1);  // only (+,+) survives
  CHECK(leaves[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(leaves[0].history.size() == 2);
  CHECK(leaves[0].history[0].second == Outcome::Plus);

  const auto dist =
      run_chain(up, {make_test("A", "e", kK), make_test("B", "p", kK)});
  REQUIRE(dist.table.size() == 4);
  CHECK(dist.table.at("++") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dist.table.at("--") == 0.0);
}
