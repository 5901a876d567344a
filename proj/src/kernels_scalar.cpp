// Copyright 2026 The Gatesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatesim/kernels.hpp"

#include <algorithm>

namespace gatesim::kernels {
namespace {

// The scalar kernels spell out the real arithmetic instead of relying on
// std::complex operator* so that the reference does not depend on the
// library's NaN/Inf recovery path (-fcx-limited-range vs Annex G).

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cplx(y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr);
  }
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    const double yr = y[i].real();
    const double yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void mul_scalar(std::size_t n, const cplx* a, const cplx* x, cplx* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real();
    const double ai = a[i].imag();
    const double xr = x[i].real();
    const double xi = x[i].imag();
    out[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

double norm_sq_scalar(std::size_t n, const cplx* x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

void gemm_scalar(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a,
                 const cplx* b, cplx* c) {
  std::fill(c, c + rows * cols, cplx{});
  for (std::size_t i = 0; i < rows; ++i) {
    cplx* crow = c + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const cplx aik = a[i * inner + k];
      if (aik == cplx{}) continue;
      axpy_scalar(cols, aik, b + k * cols, crow);
    }
  }
}

const KernelTable kScalarTable{
    Backend::Scalar, axpy_scalar, dotc_scalar, mul_scalar, norm_sq_scalar, gemm_scalar,
};

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

}  // namespace gatesim::kernels
