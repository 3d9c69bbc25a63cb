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

#include "eprsim/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

// Test builds may swap in an alternate eigenvector phase convention to show
// that no physical output depends on the one chosen above.
#ifdef EPRSIM_ALT_PHASE_CONVENTION
const Amplitude kPlusPhase = std::polar(1.0, 0.6);
const Amplitude kMinusPhase = std::polar(1.0, -1.1);
#else
const Amplitude kPlusPhase = 1.0;
const Amplitude kMinusPhase = 1.0;
#endif

}  // namespace

Axis::Axis(double nx_, double ny_, double nz_) : nx(nx_), ny(ny_), nz(nz_) {
  if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(nz)) {
    throw Error("Axis: components must be finite");
  }
  const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (n < 1e-12) {
    throw Error("Axis: zero vector is not a direction");
  }
  nx /= n;
  ny /= n;
  nz /= n;
}

SpinOperator spin_operator(const Axis& n) {
  SpinOperator m(2);
  m(0, 0) = n.nz;
  m(0, 1) = Amplitude(n.nx, -n.ny);
  m(1, 0) = Amplitude(n.nx, n.ny);
  m(1, 1) = -n.nz;
  return m;
}

Eigenbasis eigenbasis(const Axis& n) {
  const double theta = std::acos(std::clamp(n.nz, -1.0, 1.0));
  const double phi = std::atan2(n.ny, n.nx);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Amplitude eip = std::polar(1.0, phi);

  Eigenbasis basis;
  basis.plus = {kPlusPhase * c, kPlusPhase * eip * s};
  basis.minus = {kMinusPhase * (-std::conj(eip) * s), kMinusPhase * c};
  return basis;
}

SpinOperator projector(const Axis& n, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error("projector: sign must be +1 or -1");
  }
  const SpinOperator sn = spin_operator(n);
  SpinOperator p(2);
  p(0, 0) = (1.0 + double(sign) * sn(0, 0)) / 2.0;
  p(0, 1) = double(sign) * sn(0, 1) / 2.0;
  p(1, 0) = double(sign) * sn(1, 0) / 2.0;
  p(1, 1) = (1.0 + double(sign) * sn(1, 1)) / 2.0;
  return p;
}

JointState singlet(const std::string& electron_label,
                   const std::string& positron_label) {
  if (electron_label == positron_label) {
    throw DuplicateLabelError("singlet: particle labels must be distinct");
  }
  JointState s;
  s.particles = {electron_label, positron_label};
  s.amplitudes = {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
  return s;
}

std::array<Amplitude, 4> singlet_in_basis(const Axis& n) {
  const Eigenbasis b = eigenbasis(n);
  const JointState psi = singlet("e", "p");
  const SpinState* states[2] = {&b.plus, &b.minus};

  std::array<Amplitude, 4> out;
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int s2 = 0; s2 < 2; ++s2) {
      // <s1 (x) s2 | psi>
      Amplitude a{};
      const SpinState& u = *states[s1];
      const SpinState& v = *states[s2];
      const Amplitude uc[2] = {std::conj(u.up), std::conj(u.down)};
      const Amplitude vc[2] = {std::conj(v.up), std::conj(v.down)};
      for (int z1 = 0; z1 < 2; ++z1)
        for (int z2 = 0; z2 < 2; ++z2)
          a += uc[z1] * vc[z2] * psi.amplitudes[std::size_t(2 * z1 + z2)];
      out[std::size_t(2 * s1 + s2)] = a;
    }
  }
  return out;
}

std::size_t particle_index(const std::vector<std::string>& particles,
                           const std::string& label) {
  for (std::size_t i = 0; i < particles.size(); ++i) {
    if (particles[i] == label) return i;
  }
  throw UnknownParticleError("unknown particle '" + label + "'");
}

ComplexMatrix embed(const SpinOperator& op, const std::string& particle_label,
                    const std::vector<std::string>& particles) {
  if (op.dim() != 2) throw Error("embed: operator must be 2x2");
  const std::size_t pos = particle_index(particles, particle_label);

  ComplexMatrix full = ComplexMatrix::identity(1);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  for (std::size_t i = 0; i < particles.size(); ++i) {
    full = kron(full, i == pos ? op : id2);
  }
  return full;
}

double state_norm(const JointState& s) { return vec_norm(s.amplitudes); }

Amplitude state_inner(const JointState& a, const JointState& b) {
  return inner(a.amplitudes, b.amplitudes);
}

std::vector<Amplitude> apply_to_particle(const SpinOperator& op,
                                         std::size_t factor_index,
                                         std::size_t num_particles,
                                         const std::vector<Amplitude>& amps) {
  if (op.dim() != 2) {
    throw Error("apply_to_particle: operator must be 2x2");
  }
  if (amps.size() != (std::size_t(1) << num_particles) ||
      factor_index >= num_particles) {
    throw Error("apply_to_particle: shape mismatch");
  }

  // First-listed particle is the most significant bit.
  const std::size_t bit = num_particles - 1 - factor_index;
  const std::size_t stride = std::size_t(1) << bit;

  std::vector<Amplitude> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & stride) continue;
    const Amplitude a0 = amps[i];
    const Amplitude a1 = amps[i | stride];
    out[i] = op(0, 0) * a0 + op(0, 1) * a1;
    out[i | stride] = op(1, 0) * a0 + op(1, 1) * a1;
  }
  return out;
}

}  // namespace eprsim
