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

#ifndef EPRSIM_SPACETIME_HPP
#define EPRSIM_SPACETIME_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eprsim {

// Absolute tolerance separating lightlike from timelike/spacelike intervals.
// Scenario coordinates are expected at O(1) scale in natural units (c = 1).
inline constexpr double kLightconeTol = 1e-9;

// A labelled point in Minkowski spacetime, natural units (c = 1),
// signature (+,-,-,-). Coordinates must be finite.
struct Event {
  std::string label;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Event() = default;
  Event(std::string label, double t, double x, double y, double z);
};

// A frame velocity as a fraction of light speed; |v| <= 1 - 1e-12 enforced
// at construction.
struct Velocity {
  double vx = 0.0;
  double vy = 0.0;
  double vz = 0.0;

  Velocity() = default;
  Velocity(double vx, double vy, double vz);

  double speed() const;
};

enum class IntervalClass { Timelike, Spacelike, Lightlike };

const char* to_string(IntervalClass c);

//! Minkowski interval s^2 = dt^2 - |dx|^2. Symmetric in its arguments.
double interval_squared(const Event& a, const Event& b);

//! Timelike when s^2 > kLightconeTol, Spacelike when s^2 < -kLightconeTol,
//! Lightlike otherwise.
IntervalClass classify(const Event& a, const Event& b);

//! True iff b lies in the closed forward lightcone of a: b.t >= a.t and
//! s^2 >= -kLightconeTol. The light-speed boundary counts as inside.
bool in_forward_lightcone(const Event& a, const Event& b);

//! Pure Lorentz boost of an event into the frame moving with velocity v.
//! Velocities below 1e-15 return the event unchanged. Label is preserved.
Event boost(const Event& e, const Velocity& v);

//! For a spacelike pair, a concrete frame velocity that reverses (or, for
//! equal-time pairs, splits) the time order of a and b. Timelike and
//! lightlike pairs have frame-independent order, so nothing is returned.
//!
//! Construction: v points along the spatial separation b - a, signed so the
//! boosted order actually flips, with speed (|dt|/|dx| + 1)/2 (midpoint
//! between the minimal reversing speed and light speed); 0.5 when dt = 0.
std::optional<Velocity> order_reversing_frame(const Event& a, const Event& b);

//! All ordered label pairs (a, b) with a != b and b in the closed forward
//! lightcone of a. A strict partial order up to the lightlike tolerance.
//! Throws DuplicateLabelError when labels repeat.
std::set<std::pair<std::string, std::string>> causal_partial_order(
    const std::vector<Event>& events);

}  // namespace eprsim

#endif  // EPRSIM_SPACETIME_HPP
