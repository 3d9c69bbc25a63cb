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

#ifndef EPRSIM_LINALG_HPP
#define EPRSIM_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace eprsim {

using Amplitude = std::complex<double>;

// Small dense square complex matrix, row-major. Dimensions here are 2^n for
// a handful of qubits, so no attempt is made at being clever.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::initializer_list<Amplitude> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Amplitude& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Amplitude& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Amplitude> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Amplitude s, const ComplexMatrix& a);
std::vector<Amplitude> operator*(const ComplexMatrix& a,
                                 const std::vector<Amplitude>& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// <a|b> with the conjugate on the first argument.
Amplitude inner(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b);
double vec_norm(const std::vector<Amplitude>& a);

}  // namespace eprsim

#endif  // EPRSIM_LINALG_HPP
