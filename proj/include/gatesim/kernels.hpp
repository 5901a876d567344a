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

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace gatesim::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// Table of the complex inner loops used by the linear-algebra layer.
///
/// All pointers address interleaved (re, im) storage as laid out by
/// std::complex<double>. Matrices are row-major. Every backend must produce
/// results equal to the scalar reference up to floating-point reassociation.
struct KernelTable {
  Backend backend;
  /// y[i] += alpha * x[i]
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
  /// sum_i conj(x[i]) * y[i]
  cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
  /// out[i] = a[i] * x[i]
  void (*mul)(std::size_t n, const cplx* a, const cplx* x, cplx* out);
  /// sum_i |x[i]|^2
  double (*norm_sq)(std::size_t n, const cplx* x);
  /// c (rows x cols) = a (rows x inner) * b (inner x cols). Zero entries of
  /// `a` are skipped, which matters for the sparse analytic gate matrices.
  void (*gemm)(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a,
               const cplx* b, cplx* c);
};

const KernelTable& scalar_table();
/// Null when the library was built without AVX2 support.
const KernelTable* avx2_table();

/// True when the AVX2 table was compiled in and the CPU reports AVX2 + FMA.
bool avx2_available();

/// The table used by the library. Chosen once on first use: AVX2 when
/// available, unless GATESIM_KERNELS=scalar is set in the environment.
const KernelTable& active();

/// Overrides the active backend (tests and benchmarks). Returns false if the
/// requested backend is not available on this machine.
bool set_backend(Backend backend);

std::string_view backend_name(Backend backend);

}  // namespace gatesim::kernels
