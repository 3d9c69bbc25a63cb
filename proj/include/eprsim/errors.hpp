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

#ifndef EPRSIM_ERRORS_HPP
#define EPRSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eprsim {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |v| >= 1 (or numerically indistinguishable from 1).
class SpeedLimitError : public Error {
 public:
  using Error::Error;
};

// A particle label does not occur in the state's particle list.
class UnknownParticleError : public Error {
 public:
  using Error::Error;
};

// Input state norm deviates from 1 beyond tolerance.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// Conditioning set has probability below the pruning threshold.
class ZeroConditionProbabilityError : public Error {
 public:
  using Error::Error;
};

// A test label does not occur in a distribution.
class UnknownTestError : public Error {
 public:
  using Error::Error;
};

// Orders passed to an order-invariance check are not permutations of one set.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

// Operation requires a scenario that validates cleanly.
class NotValidatedError : public Error {
 public:
  using Error::Error;
};

class DuplicateLabelError : public Error {
 public:
  using Error::Error;
};

class UnknownReferenceError : public Error {
 public:
  using Error::Error;
};

// Scenario file is not syntactically valid JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Scenario file is valid JSON but violates the schema; message carries the
// JSON path of the offending field.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Explicit amplitudes are not within tolerance of unit norm.
class NormError : public Error {
 public:
  using Error::Error;
};

}  // namespace eprsim

#endif  // EPRSIM_ERRORS_HPP
