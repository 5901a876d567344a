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

#include "gatesim/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gatesim/kernels.hpp"

namespace gatesim {

// ---------------------------------------------------------------- HilbertSpace

HilbertSpace::HilbertSpace(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("HilbertSpace needs at least one subsystem");
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (dims_[i] == 0) throw std::invalid_argument("subsystem dimension must be positive");
    strides_[i] = total_;
    total_ *= dims_[i];
  }
}

HilbertSpace HilbertSpace::qudits_with_cavity(std::size_t qudits, std::size_t cavity_dim) {
  if (cavity_dim < 2) throw std::invalid_argument("cavity truncation must be at least 2");
  std::vector<std::size_t> dims(qudits, 4);
  dims.push_back(cavity_dim);
  return HilbertSpace(std::move(dims));
}

std::size_t HilbertSpace::index_of(std::span<const std::size_t> digits) const {
  if (digits.size() != dims_.size()) throw std::invalid_argument("wrong number of digits");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= dims_[i]) throw std::out_of_range("level exceeds subsystem dimension");
    idx += digits[i] * strides_[i];
  }
  return idx;
}

std::vector<std::size_t> HilbertSpace::digits_of(std::size_t index) const {
  if (index >= total_) throw std::out_of_range("basis index out of range");
  std::vector<std::size_t> out(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) out[i] = digit(index, i);
  return out;
}

// --------------------------------------------------------------- ComplexMatrix

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::active().norm_sq(data_.size(), data_.data()));
}

std::size_t ComplexMatrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const cplx& z) { return z != cplx{}; }));
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<cplx> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    cplx acc{};
    const cplx* row_ptr = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row_ptr[c] != cplx{}) acc += row_ptr[c] * v[c];
    }
    out[r] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  kernels::active().axpy(data_.size(), cplx{1.0, 0.0}, other.data_.data(), data_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  kernels::active().axpy(data_.size(), cplx{-1.0, 0.0}, other.data_.data(), data_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ComplexMatrix c(a.rows_, b.cols_);
  kernels::active().gemm(a.rows_, a.cols_, b.cols_, a.data(), b.data(), c.data());
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

// ----------------------------------------------------------------- StateVector

StateVector::StateVector(HilbertSpace space, std::vector<cplx> amplitudes)
    : space_(std::move(space)), amps_(std::move(amplitudes)) {
  if (amps_.size() != space_.total_dim()) {
    throw std::invalid_argument("amplitude count does not match the Hilbert space");
  }
}

StateVector StateVector::basis(const HilbertSpace& space, std::size_t index) {
  if (index >= space.total_dim()) throw std::out_of_range("basis index out of range");
  std::vector<cplx> amps(space.total_dim());
  amps[index] = 1.0;
  return {space, std::move(amps)};
}

StateVector StateVector::basis(const HilbertSpace& space, std::span<const std::size_t> digits) {
  return basis(space, space.index_of(digits));
}

double StateVector::norm() const {
  return std::sqrt(kernels::active().norm_sq(amps_.size(), amps_.data()));
}

double StateVector::population(std::size_t slot, std::size_t level) const {
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (space_.digit(i, slot) == level) p += std::norm(amps_[i]);
  }
  return p;
}

cplx inner_product(const StateVector& bra, const StateVector& ket) {
  if (!(bra.space() == ket.space())) throw std::invalid_argument("states live on different spaces");
  return kernels::active().dotc(bra.amplitudes().size(), bra.amplitudes().data(),
                                ket.amplitudes().data());
}

// --------------------------------------------------------------- UnitaryMatrix

UnitaryMatrix::UnitaryMatrix(HilbertSpace space, ComplexMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.total_dim() || matrix_.cols() != space_.total_dim()) {
    throw std::invalid_argument("unitary size does not match the Hilbert space");
  }
}

UnitaryMatrix UnitaryMatrix::identity(const HilbertSpace& space) {
  return {space, ComplexMatrix::identity(space.total_dim())};
}

double UnitaryMatrix::unitarity_error() const {
  ComplexMatrix g = matrix_.adjoint() * matrix_;
  g -= ComplexMatrix::identity(g.rows());
  return g.frobenius_norm();
}

StateVector UnitaryMatrix::apply(const StateVector& state) const {
  if (!(state.space() == space_)) throw std::invalid_argument("state lives on a different space");
  return {space_, matrix_.apply(state.amplitudes())};
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (!(a.space_ == b.space_)) throw std::invalid_argument("unitaries on different spaces");
  return {a.space_, a.matrix_ * b.matrix_};
}

// ----------------------------------------------------------- HermitianOperator

HermitianOperator::HermitianOperator(HilbertSpace space, ComplexMatrix matrix, double tol)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const std::size_t n = space_.total_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("operator size does not match the Hilbert space");
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(matrix_.data()[i]));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const cplx a = matrix_(r, c);
      const cplx b = matrix_(c, r);
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw std::invalid_argument("operator has non-finite entries");
      }
      if (std::abs(a - std::conj(b)) > tol * std::max(1.0, scale)) {
        throw std::invalid_argument("operator is not Hermitian (entry " + std::to_string(r) +
                                    "," + std::to_string(c) + ")");
      }
    }
  }
}

HermitianOperator HermitianOperator::zero(const HilbertSpace& space) {
  return {space, ComplexMatrix(space.total_dim(), space.total_dim())};
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  if (!(space_ == other.space_)) throw std::invalid_argument("operators on different spaces");
  matrix_ += other.matrix_;
  return *this;
}

// ------------------------------------------------------------------ embedding

namespace {

struct EmbedLayout {
  std::vector<std::size_t> local_offsets;  // global offset of each local basis index
  std::vector<std::size_t> rest_offsets;   // global offset of each spectator configuration
};

EmbedLayout make_layout(const HilbertSpace& space, std::span<const std::size_t> slots,
                        std::size_t local_dim) {
  const std::size_t n = space.num_subsystems();
  std::vector<bool> used(n, false);
  std::size_t expected = 1;
  for (std::size_t s : slots) {
    if (s >= n) throw std::out_of_range("slot " + std::to_string(s) + " out of range");
    if (used[s]) throw std::invalid_argument("duplicate slot " + std::to_string(s));
    used[s] = true;
    expected *= space.dim(s);
  }
  if (slots.empty()) throw std::invalid_argument("no slots given");
  if (expected != local_dim) {
    throw std::invalid_argument("local operator dimension " + std::to_string(local_dim) +
                                " does not match slot dimensions (" + std::to_string(expected) +
                                ")");
  }

  EmbedLayout layout;
  layout.local_offsets.assign(local_dim, 0);
  for (std::size_t a = 0; a < local_dim; ++a) {
    std::size_t rem = a;
    std::size_t off = 0;
    for (std::size_t k = slots.size(); k-- > 0;) {
      const std::size_t d = space.dim(slots[k]);
      off += (rem % d) * space.stride(slots[k]);
      rem /= d;
    }
    layout.local_offsets[a] = off;
  }

  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < n; ++s) {
    if (!used[s]) rest.push_back(s);
  }
  const std::size_t rest_count = space.total_dim() / local_dim;
  layout.rest_offsets.assign(rest_count, 0);
  for (std::size_t r = 0; r < rest_count; ++r) {
    std::size_t rem = r;
    std::size_t off = 0;
    for (std::size_t k = rest.size(); k-- > 0;) {
      const std::size_t d = space.dim(rest[k]);
      off += (rem % d) * space.stride(rest[k]);
      rem /= d;
    }
    layout.rest_offsets[r] = off;
  }
  return layout;
}

}  // namespace

ComplexMatrix tensor_embed(const ComplexMatrix& local, const HilbertSpace& space,
                           std::span<const std::size_t> slots) {
  if (!local.is_square()) throw std::invalid_argument("local operator must be square");
  const EmbedLayout layout = make_layout(space, slots, local.rows());
  const std::size_t d = local.rows();
  ComplexMatrix out(space.total_dim(), space.total_dim());
  for (std::size_t base : layout.rest_offsets) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const cplx v = local(a, b);
        if (v != cplx{}) out(base + layout.local_offsets[a], base + layout.local_offsets[b]) = v;
      }
    }
  }
  return out;
}

HermitianOperator embed_hermitian(const ComplexMatrix& local, const HilbertSpace& space,
                                  std::span<const std::size_t> slots) {
  return {space, tensor_embed(local, space, slots)};
}

UnitaryMatrix embed_unitary(const ComplexMatrix& local, const HilbertSpace& space,
                            std::span<const std::size_t> slots) {
  return {space, tensor_embed(local, space, slots)};
}

void apply_local(const LocalOperator& op, const HilbertSpace& space, ComplexMatrix& target) {
  if (target.rows() != space.total_dim()) throw std::invalid_argument("target size mismatch");
  const EmbedLayout layout = make_layout(space, op.slots, op.matrix.rows());
  const std::size_t d = op.matrix.rows();
  const std::size_t cols = target.cols();
  const auto& k = kernels::active();
  ComplexMatrix scratch(d, cols);
  for (std::size_t base : layout.rest_offsets) {
    std::fill(scratch.data(), scratch.data() + d * cols, cplx{});
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const cplx v = op.matrix(a, b);
        if (v == cplx{}) continue;
        k.axpy(cols, v, target.row(base + layout.local_offsets[b]).data(), scratch.row(a).data());
      }
    }
    for (std::size_t a = 0; a < d; ++a) {
      std::copy(scratch.row(a).begin(), scratch.row(a).end(),
                target.row(base + layout.local_offsets[a]).begin());
    }
  }
}

void apply_local(const LocalOperator& op, const HilbertSpace& space, std::vector<cplx>& state) {
  if (state.size() != space.total_dim()) throw std::invalid_argument("state size mismatch");
  const EmbedLayout layout = make_layout(space, op.slots, op.matrix.rows());
  const std::size_t d = op.matrix.rows();
  std::vector<cplx> in(d);
  for (std::size_t base : layout.rest_offsets) {
    for (std::size_t b = 0; b < d; ++b) in[b] = state[base + layout.local_offsets[b]];
    for (std::size_t a = 0; a < d; ++a) {
      cplx acc{};
      for (std::size_t b = 0; b < d; ++b) acc += op.matrix(a, b) * in[b];
      state[base + layout.local_offsets[a]] = acc;
    }
  }
}

// -------------------------------------------------------------------- Spectrum

Spectrum::Spectrum(const ComplexMatrix& hermitian) {
  if (!hermitian.is_square()) throw std::invalid_argument("Spectrum needs a square matrix");
  const auto n = static_cast<Eigen::Index>(hermitian.rows());
  using RowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> h(hermitian.data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  eigenvalues_.resize(static_cast<std::size_t>(n));
  eigvecs_ = ComplexMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (Eigen::Index m = 0; m < n; ++m) {
    eigenvalues_[static_cast<std::size_t>(m)] = solver.eigenvalues()(m);
    for (Eigen::Index k = 0; k < n; ++k) {
      eigvecs_(static_cast<std::size_t>(m), static_cast<std::size_t>(k)) =
          solver.eigenvectors()(k, m);
    }
  }
}

ComplexMatrix Spectrum::propagator(double t) const {
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
  const std::size_t n = dim();
  // exp(-iHt) = V D V^dagger; V[k][m] = eigvecs_(m, k).
  ComplexMatrix vd(n, n);
  ComplexMatrix vadj(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const cplx phase = std::polar(1.0, -eigenvalues_[m] * t);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx v = eigvecs_(m, k);
      vd(k, m) = v * phase;
      vadj(m, k) = std::conj(v);
    }
  }
  return vd * vadj;
}

void Spectrum::evolve_in_place(std::vector<cplx>& v, double t) const {
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
  const std::size_t n = dim();
  if (v.size() != n) throw std::invalid_argument("state size mismatch");
  const auto& k = kernels::active();
  std::vector<cplx> coeff(n);
  for (std::size_t m = 0; m < n; ++m) {
    coeff[m] = k.dotc(n, eigvecs_.row(m).data(), v.data()) *
               std::polar(1.0, -eigenvalues_[m] * t);
  }
  std::fill(v.begin(), v.end(), cplx{});
  for (std::size_t m = 0; m < n; ++m) {
    if (coeff[m] != cplx{}) k.axpy(n, coeff[m], eigvecs_.row(m).data(), v.data());
  }
}

// ------------------------------------------------------------ evolution + fid

StateVector evolve(const StateVector& state, const HermitianOperator& h, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
  if (t < 0.0) throw std::invalid_argument("evolution time must be non-negative");
  if (!(state.space() == h.space())) throw std::invalid_argument("state and operator spaces differ");
  std::vector<cplx> amps = state.amplitudes();
  if (t > 0.0) Spectrum(h.matrix()).evolve_in_place(amps, t);
  return {state.space(), std::move(amps)};
}

UnitaryMatrix propagator(const HermitianOperator& h, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
  if (t == 0.0) return UnitaryMatrix::identity(h.space());
  return {h.space(), Spectrum(h.matrix()).propagator(t)};
}

double process_fidelity(const ComplexMatrix& u, const ComplexMatrix& v,
                        std::span<const std::size_t> subspace) {
  if (subspace.empty()) throw std::invalid_argument("empty comparison subspace");
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("shape mismatch");
  cplx trace{};
  for (std::size_t a : subspace) {
    if (a >= u.cols()) throw std::out_of_range("subspace index out of range");
    for (std::size_t k = 0; k < u.rows(); ++k) trace += std::conj(u(k, a)) * v(k, a);
  }
  const double d = static_cast<double>(subspace.size());
  return std::min(1.0, std::norm(trace) / (d * d));
}

double process_fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v,
                        std::span<const std::size_t> subspace) {
  if (!(u.space() == v.space())) throw std::invalid_argument("unitaries on different spaces");
  return process_fidelity(u.matrix(), v.matrix(), subspace);
}

bool exact_match(const UnitaryMatrix& u, const UnitaryMatrix& v,
                 std::span<const std::size_t> subspace, double tol) {
  if (!(u.space() == v.space())) throw std::invalid_argument("unitaries on different spaces");
  if (subspace.empty()) throw std::invalid_argument("empty comparison subspace");
  for (std::size_t a : subspace) {
    if (a >= u.space().total_dim()) throw std::out_of_range("subspace index out of range");
    for (std::size_t k = 0; k < u.space().total_dim(); ++k) {
      if (std::abs(u(k, a) - v(k, a)) > tol) return false;
    }
  }
  return true;
}

}  // namespace gatesim
