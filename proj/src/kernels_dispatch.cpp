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

#include <atomic>
#include <cstdlib>
#include <string>

#include "gatesim/kernels.hpp"

namespace gatesim::kernels {

#ifndef GATESIM_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

bool avx2_available() {
#if defined(GATESIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported && avx2_table() != nullptr;
#else
  return false;
#endif
}

namespace {

const KernelTable* initial_table() {
  if (const char* env = std::getenv("GATESIM_KERNELS")) {
    if (std::string(env) == "scalar") return &scalar_table();
  }
  return avx2_available() ? avx2_table() : &scalar_table();
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

bool set_backend(Backend backend) {
  if (backend == Backend::Scalar) {
    active_slot().store(&scalar_table(), std::memory_order_release);
    return true;
  }
  if (!avx2_available()) return false;
  active_slot().store(avx2_table(), std::memory_order_release);
  return true;
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace gatesim::kernels
