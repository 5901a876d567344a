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

#include <gtest/gtest.h>

#include <complex>
#include <vector>

#include "gatesim/kernels.hpp"
#include "test_util.hpp"

namespace gatesim {
namespace {

using kernels::Backend;
using kernels::KernelTable;
using testing::random_vector;

const KernelTable* avx2_or_skip() {
  if (!kernels::avx2_available()) return nullptr;
  return kernels::avx2_table();
}

double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Sizes straddle the 2-wide vector width and the unrolled tails.
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 129};

TEST(Kernels, ScalarReferenceMatchesNaiveLoops) {
  const KernelTable& s = kernels::scalar_table();
  auto& gen = testing::rng();
  for (std::size_t n : kSizes) {
    const auto x = random_vector(n, gen);
    const auto y0 = random_vector(n, gen);
    const cplx alpha{0.3, -1.7};
    auto y = y0;
    s.axpy(n, alpha, x.data(), y.data());
    cplx dot{};
    double nsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_LT(std::abs(y[i] - (y0[i] + alpha * x[i])), 1e-13);
      dot += std::conj(x[i]) * y0[i];
      nsq += std::norm(x[i]);
    }
    EXPECT_LT(rel_diff(s.dotc(n, x.data(), y0.data()), dot), 1e-12);
    EXPECT_NEAR(s.norm_sq(n, x.data()), nsq, 1e-12 * std::max(1.0, nsq));
    std::vector<cplx> out(n);
    s.mul(n, x.data(), y0.data(), out.data());
    for (std::size_t i = 0; i < n; ++i) EXPECT_LT(std::abs(out[i] - x[i] * y0[i]), 1e-13);
  }
}

TEST(Kernels, Avx2MatchesScalarOnVectorOps) {
  const KernelTable* v = avx2_or_skip();
  if (v == nullptr) GTEST_SKIP() << "AVX2 not available";
  const KernelTable& s = kernels::scalar_table();
  auto& gen = testing::rng();
  for (int trial = 0; trial < 20; ++trial) {
    for (std::size_t n : kSizes) {
      const auto x = random_vector(n, gen);
      const auto y0 = random_vector(n, gen);
      const cplx alpha = testing::random_cplx(gen);
      auto ys = y0;
      auto yv = y0;
      s.axpy(n, alpha, x.data(), ys.data());
      v->axpy(n, alpha, x.data(), yv.data());
      for (std::size_t i = 0; i < n; ++i) EXPECT_LT(rel_diff(yv[i], ys[i]), 1e-13);

      EXPECT_LT(rel_diff(v->dotc(n, x.data(), y0.data()), s.dotc(n, x.data(), y0.data())), 1e-12);
      EXPECT_NEAR(v->norm_sq(n, x.data()), s.norm_sq(n, x.data()),
                  1e-12 * std::max(1.0, s.norm_sq(n, x.data())));

      std::vector<cplx> ms(n), mv(n);
      s.mul(n, x.data(), y0.data(), ms.data());
      v->mul(n, x.data(), y0.data(), mv.data());
      for (std::size_t i = 0; i < n; ++i) EXPECT_LT(rel_diff(mv[i], ms[i]), 1e-13);
    }
  }
}

TEST(Kernels, Avx2GemmMatchesScalarIncludingSparseInputs) {
  const KernelTable* v = avx2_or_skip();
  if (v == nullptr) GTEST_SKIP() << "AVX2 not available";
  const KernelTable& s = kernels::scalar_table();
  auto& gen = testing::rng();
  std::uniform_int_distribution<std::size_t> dim(1, 19);
  std::bernoulli_distribution sparse(0.6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = dim(gen), k = dim(gen), c = dim(gen);
    auto a = random_vector(r * k, gen);
    for (cplx& e : a) {
      if (sparse(gen)) e = 0.0;
    }
    const auto b = random_vector(k * c, gen);
    std::vector<cplx> cs(r * c, cplx{9.0, 9.0}), cv(r * c, cplx{-9.0, 1.0});
    s.gemm(r, k, c, a.data(), b.data(), cs.data());
    v->gemm(r, k, c, a.data(), b.data(), cv.data());
    for (std::size_t i = 0; i < r * c; ++i) EXPECT_LT(rel_diff(cv[i], cs[i]), 1e-12);
    // Reference product.
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        cplx acc{};
        for (std::size_t l = 0; l < k; ++l) acc += a[i * k + l] * b[l * c + j];
        EXPECT_LT(rel_diff(cs[i * c + j], acc), 1e-12);
      }
    }
  }
}

TEST(Kernels, BackendSelectionRoundTrips) {
  const Backend original = kernels::active().backend;
  ASSERT_TRUE(kernels::set_backend(Backend::Scalar));
  EXPECT_EQ(kernels::active().backend, Backend::Scalar);
  EXPECT_EQ(kernels::set_backend(Backend::Avx2), kernels::avx2_available());
  if (kernels::avx2_available()) {
    EXPECT_EQ(kernels::active().backend, Backend::Avx2);
  }
  EXPECT_EQ(kernels::backend_name(Backend::Scalar), "scalar");
  EXPECT_EQ(kernels::backend_name(Backend::Avx2), "avx2");
  kernels::set_backend(original);
}

TEST(Kernels, MatrixProductIdenticalUnderBothBackends) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available";
  auto& gen = testing::rng();
  const ComplexMatrix a = testing::random_matrix(23, 17, gen);
  const ComplexMatrix b = testing::random_matrix(17, 11, gen);
  const Backend original = kernels::active().backend;
  kernels::set_backend(Backend::Scalar);
  const ComplexMatrix ps = a * b;
  kernels::set_backend(Backend::Avx2);
  const ComplexMatrix pv = a * b;
  kernels::set_backend(original);
  EXPECT_LT(max_abs_diff(ps, pv), 1e-12);
}

}  // namespace
}  // namespace gatesim
