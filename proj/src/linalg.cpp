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

#include "eprsim/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace eprsim {

ComplexMatrix::ComplexMatrix(std::size_t dim,
                             std::initializer_list<Amplitude> entries)
    : dim_(dim), a_(entries) {
  if (a_.size() != dim * dim) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match dim");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix add: dim mismatch");
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix mul: dim mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Amplitude aik = a(i, k);
      if (aik == Amplitude{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator*(Amplitude s, const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  return c;
}

std::vector<Amplitude> operator*(const ComplexMatrix& a,
                                 const std::vector<Amplitude>& v) {
  if (a.dim() != v.size()) throw std::invalid_argument("matvec: dim mismatch");
  std::vector<Amplitude> w(v.size());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Amplitude s{};
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
    w[i] = s;
  }
  return w;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Amplitude aij = a(i, j);
      if (aij == Amplitude{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          c(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dim mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

Amplitude inner(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: size mismatch");
  Amplitude s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vec_norm(const std::vector<Amplitude>& a) {
  double s = 0.0;
  for (const Amplitude& c : a) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace eprsim
