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

#include "eprsim/spacetime.hpp"

#include <cmath>
#include <stdexcept>

#include "eprsim/errors.hpp"

namespace eprsim {

namespace {
constexpr double kMaxSpeed = 1.0 - 1e-12;
constexpr double kRestTol = 1e-15;
}  // namespace

Event::Event(std::string label_, double t_, double x_, double y_, double z_)
    : label(std::move(label_)), t(t_), x(x_), y(y_), z(z_) {
  if (!std::isfinite(t) || !std::isfinite(x) || !std::isfinite(y) ||
      !std::isfinite(z)) {
    throw Error("Event '" + label + "': coordinates must be finite");
  }
}

Velocity::Velocity(double vx_, double vy_, double vz_) : vx(vx_), vy(vy_), vz(vz_) {
  if (!std::isfinite(vx) || !std::isfinite(vy) || !std::isfinite(vz)) {
    throw SpeedLimitError("Velocity: components must be finite");
  }
  if (speed() > kMaxSpeed) {
    throw SpeedLimitError("Velocity: |v| must stay below light speed");
  }
}

double Velocity::speed() const { return std::sqrt(vx * vx + vy * vy + vz * vz); }

const char* to_string(IntervalClass c) {
  switch (c) {
    case IntervalClass::Timelike:
      return "Timelike";
    case IntervalClass::Spacelike:
      return "Spacelike";
    case IntervalClass::Lightlike:
      return "Lightlike";
  }
  return "?";
}

double interval_squared(const Event& a, const Event& b) {
  const double dt = b.t - a.t;
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double dz = b.z - a.z;
  return dt * dt - dx * dx - dy * dy - dz * dz;
}

IntervalClass classify(const Event& a, const Event& b) {
  const double s2 = interval_squared(a, b);
  if (s2 > kLightconeTol) return IntervalClass::Timelike;
  if (s2 < -kLightconeTol) return IntervalClass::Spacelike;
  return IntervalClass::Lightlike;
}

bool in_forward_lightcone(const Event& a, const Event& b) {
  return b.t >= a.t && interval_squared(a, b) >= -kLightconeTol;
}

Event boost(const Event& e, const Velocity& v) {
  const double speed = v.speed();
  if (speed < kRestTol) return e;

  const double v2 = speed * speed;
  const double gamma = 1.0 / std::sqrt(1.0 - v2);
  const double vdotx = v.vx * e.x + v.vy * e.y + v.vz * e.z;
  const double spatial = (gamma - 1.0) * vdotx / v2 - gamma * e.t;

  Event out = e;
  out.t = gamma * (e.t - vdotx);
  out.x = e.x + spatial * v.vx;
  out.y = e.y + spatial * v.vy;
  out.z = e.z + spatial * v.vz;
  return out;
}

std::optional<Velocity> order_reversing_frame(const Event& a, const Event& b) {
  if (classify(a, b) != IntervalClass::Spacelike) return std::nullopt;

  const double dt = b.t - a.t;
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double dz = b.z - a.z;
  const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
  // Spacelike guarantees dist > |dt| >= 0, so dist > 0 here.

  double speed = 0.5;
  double sign = 1.0;
  if (dt != 0.0) {
    speed = (std::abs(dt) / dist + 1.0) / 2.0;
    sign = dt > 0.0 ? 1.0 : -1.0;
  }
  const double f = sign * speed / dist;
  return Velocity(f * dx, f * dy, f * dz);
}

std::set<std::pair<std::string, std::string>> causal_partial_order(
    const std::vector<Event>& events) {
  std::set<std::string> labels;
  for (const Event& e : events) {
    if (!labels.insert(e.label).second) {
      throw DuplicateLabelError("causal_partial_order: duplicate event label '" +
                                e.label + "'");
    }
  }

  std::set<std::pair<std::string, std::string>> order;
  for (const Event& a : events) {
    for (const Event& b : events) {
      if (a.label != b.label && in_forward_lightcone(a, b)) {
        order.emplace(a.label, b.label);
      }
    }
  }
  return order;
}

}  // namespace eprsim
