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

#ifndef EPRSIM_SPIN_HPP
#define EPRSIM_SPIN_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "eprsim/linalg.hpp"

namespace eprsim {

// A spin-measurement direction. Inputs are normalized at construction; the
// zero vector (and anything non-finite) is rejected.
struct Axis {
  double nx = 0.0;
  double ny = 0.0;
  double nz = 1.0;

  Axis() = default;
  Axis(double nx, double ny, double nz);
};

inline double dot(const Axis& a, const Axis& b) {
  return a.nx * b.nx + a.ny * b.ny + a.nz * b.nz;
}

// Single spin-1/2 state, amplitudes in the z-basis.
struct SpinState {
  Amplitude up;
  Amplitude down;
};

struct Eigenbasis {
  SpinState plus;
  SpinState minus;
};

// Pure state of n spin-1/2 particles. Amplitudes are indexed by outcome
// bit-strings in the z-basis with the first-listed particle as the most
// significant bit; bit 0 means spin up along z.
struct JointState {
  std::vector<std::string> particles;
  std::vector<Amplitude> amplitudes;
};

using SpinOperator = ComplexMatrix;  // 2x2, Hermitian for every sigma.n

//! sigma.n = [[nz, nx - i ny], [nx + i ny, -nz]].
SpinOperator spin_operator(const Axis& n);

//! Eigenvectors of sigma.n with eigenvalues +1 / -1. Phase convention via
//! spherical angles theta = arccos(nz), phi = atan2(ny, nx):
//!   plus  = (cos(theta/2),            e^{i phi} sin(theta/2))
//!   minus = (-e^{-i phi} sin(theta/2), cos(theta/2))
Eigenbasis eigenbasis(const Axis& n);

//! Spectral projector (I + sign * sigma.n) / 2; sign must be +1 or -1.
SpinOperator projector(const Axis& n, int sign);

//! The normalized total-spin-zero state of an (electron, positron) pair,
//! z-basis amplitudes (0, 1/sqrt 2, -1/sqrt 2, 0) with the electron as the
//! most significant factor. Labels must be distinct.
JointState singlet(const std::string& electron_label,
                   const std::string& positron_label);

//! Amplitudes of the singlet in the product eigenbasis of spin along n for
//! both particles, ordered (++, +-, -+, --). Equal to the z-basis amplitudes
//! up to one global phase, whatever n is.
std::array<Amplitude, 4> singlet_in_basis(const Axis& n);

//! The 2^n x 2^n operator acting as `op` on the named particle's factor and
//! as the identity on every other factor. Throws UnknownParticleError.
ComplexMatrix embed(const SpinOperator& op, const std::string& particle_label,
                    const std::vector<std::string>& particles);

//! Position of a particle label in the state's factor list (0 = most
//! significant). Throws UnknownParticleError.
std::size_t particle_index(const std::vector<std::string>& particles,
                           const std::string& label);

double state_norm(const JointState& s);
Amplitude state_inner(const JointState& a, const JointState& b);

//! Apply a 2x2 operator to one tensor factor in place of the full embed-and-
//! multiply route; agrees with embed(op, label, ...) * amplitudes.
std::vector<Amplitude> apply_to_particle(const SpinOperator& op,
                                         std::size_t factor_index,
                                         std::size_t num_particles,
                                         const std::vector<Amplitude>& amps);

}  // namespace eprsim

#endif  // EPRSIM_SPIN_HPP
