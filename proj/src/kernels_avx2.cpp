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

// AVX2 + FMA variants of the complex kernels. Compiled with -mavx2 -mfma and
// only reached through the runtime dispatch in kernels_dispatch.cpp.

#include <immintrin.h>

#include <algorithm>

#include "gatesim/kernels.hpp"

namespace gatesim::kernels {
namespace {

// One __m256d holds two interleaved complex numbers: [re0, im0, re1, im1].

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double even_minus_odd(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
    const __m256d x1 = _mm256_loadu_pd(xp + 2 * i + 4);
    const __m256d p0 = _mm256_fmaddsub_pd(ar, x0, _mm256_mul_pd(ai, swap_re_im(x0)));
    const __m256d p1 = _mm256_fmaddsub_pd(ar, x1, _mm256_mul_pd(ai, swap_re_im(x1)));
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i), p0));
    _mm256_storeu_pd(yp + 2 * i + 4, _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i + 4), p1));
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
    const __m256d p0 = _mm256_fmaddsub_pd(ar, x0, _mm256_mul_pd(ai, swap_re_im(x0)));
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i), p0));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cplx(y[i].real() + alpha.real() * xr - alpha.imag() * xi,
                y[i].imag() + alpha.real() * xi + alpha.imag() * xr);
  }
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    // [xr*yr, xi*yi] and [xr*yi, xi*yr]
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    acc_im = _mm256_fmadd_pd(xv, swap_re_im(yv), acc_im);
  }
  double re = hsum(acc_re);
  double im = even_minus_odd(acc_im);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void mul_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* out) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* xp = reinterpret_cast<const double*>(x);
  double* op = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d av = _mm256_loadu_pd(ap + 2 * i);
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d a_re = _mm256_movedup_pd(av);
    const __m256d a_im = _mm256_permute_pd(av, 0b1111);
    _mm256_storeu_pd(op + 2 * i,
                     _mm256_fmaddsub_pd(a_re, xv, _mm256_mul_pd(a_im, swap_re_im(xv))));
  }
  for (; i < n; ++i) {
    out[i] = cplx(a[i].real() * x[i].real() - a[i].imag() * x[i].imag(),
                  a[i].real() * x[i].imag() + a[i].imag() * x[i].real());
  }
}

double norm_sq_avx2(std::size_t n, const cplx* x) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void gemm_avx2(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a,
               const cplx* b, cplx* c) {
  std::fill(c, c + rows * cols, cplx{});
  for (std::size_t i = 0; i < rows; ++i) {
    cplx* crow = c + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const cplx aik = a[i * inner + k];
      if (aik == cplx{}) continue;
      axpy_avx2(cols, aik, b + k * cols, crow);
    }
  }
}

const KernelTable kAvx2Table{
    Backend::Avx2, axpy_avx2, dotc_avx2, mul_avx2, norm_sq_avx2, gemm_avx2,
};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace gatesim::kernels
