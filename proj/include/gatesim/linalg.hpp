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
#include <span>
#include <vector>

namespace gatesim {

using cplx = std::complex<double>;

/// Default tolerances. Analytic identities are checked at `identity`, norms
/// at `norm`, Hermiticity of built operators at `hermitian`.
struct Tolerances {
  double identity = 1e-10;
  double norm = 1e-12;
  double hermitian = 1e-12;
};

/// Ordered list of subsystem dimensions. Basis index is the mixed-radix
/// number of the per-subsystem levels with the LAST subsystem least
/// significant. By convention the qudits come first (qubit 1 is slot 0) and
/// the cavity is the last slot.
class HilbertSpace {
 public:
  HilbertSpace() = default;
  explicit HilbertSpace(std::vector<std::size_t> dims);

  /// `qudits` four-level systems followed by a cavity truncated at
  /// `cavity_dim` Fock states (photon numbers 0..cavity_dim-1).
  static HilbertSpace qudits_with_cavity(std::size_t qudits, std::size_t cavity_dim);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t num_subsystems() const { return dims_.size(); }
  std::size_t dim(std::size_t slot) const { return dims_.at(slot); }
  std::size_t total_dim() const { return total_; }
  std::size_t stride(std::size_t slot) const { return strides_.at(slot); }
  std::size_t cavity_slot() const { return dims_.size() - 1; }
  std::size_t num_qudits() const { return dims_.size() - 1; }

  std::size_t index_of(std::span<const std::size_t> digits) const;
  std::vector<std::size_t> digits_of(std::size_t index) const;
  std::size_t digit(std::size_t index, std::size_t slot) const {
    return (index / strides_[slot]) % dims_[slot];
  }

  bool operator==(const HilbertSpace& other) const { return dims_ == other.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  std::size_t nonzeros() const;

  /// Matrix-vector product.
  std::vector<cplx> apply(std::span<const cplx> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Complex amplitudes over a HilbertSpace.
class StateVector {
 public:
  StateVector() = default;
  StateVector(HilbertSpace space, std::vector<cplx> amplitudes);

  static StateVector basis(const HilbertSpace& space, std::size_t index);
  static StateVector basis(const HilbertSpace& space, std::span<const std::size_t> digits);

  const HilbertSpace& space() const { return space_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& mutable_amplitudes() { return amps_; }
  cplx amplitude(std::size_t index) const { return amps_.at(index); }
  cplx amplitude(std::span<const std::size_t> digits) const {
    return amps_.at(space_.index_of(digits));
  }
  double norm() const;

  /// Total probability on basis states whose digit at `slot` equals `level`.
  double population(std::size_t slot, std::size_t level) const;

 private:
  HilbertSpace space_;
  std::vector<cplx> amps_;
};

cplx inner_product(const StateVector& bra, const StateVector& ket);

/// Dense matrix acting on a HilbertSpace, expected (not enforced on
/// construction) to be unitary; see unitarity_error().
class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  UnitaryMatrix(HilbertSpace space, ComplexMatrix matrix);
  static UnitaryMatrix identity(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  cplx operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  /// Frobenius norm of U^dagger U - I.
  double unitarity_error() const;
  UnitaryMatrix adjoint() const { return {space_, matrix_.adjoint()}; }
  StateVector apply(const StateVector& state) const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  HilbertSpace space_;
  ComplexMatrix matrix_;
};

/// Hermitian operator in angular-frequency units (rad/s). Construction
/// rejects matrices with ||H - H^dagger||_max above the tolerance.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  HermitianOperator(HilbertSpace space, ComplexMatrix matrix, double tol = Tolerances{}.hermitian);
  static HermitianOperator zero(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  cplx operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  HermitianOperator& operator+=(const HermitianOperator& other);
  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
    return a += b;
  }

 private:
  HilbertSpace space_;
  ComplexMatrix matrix_;
};

/// Embeds `local` on the listed subsystems (in the listed order) and the
/// identity on every other subsystem. `local` must have dimension equal to
/// the product of the slot dimensions; slots must be distinct and in range.
ComplexMatrix tensor_embed(const ComplexMatrix& local, const HilbertSpace& space,
                           std::span<const std::size_t> slots);
HermitianOperator embed_hermitian(const ComplexMatrix& local, const HilbertSpace& space,
                                  std::span<const std::size_t> slots);
UnitaryMatrix embed_unitary(const ComplexMatrix& local, const HilbertSpace& space,
                            std::span<const std::size_t> slots);

/// A small operator together with the subsystems it acts on.
struct LocalOperator {
  ComplexMatrix matrix;
  std::vector<std::size_t> slots;
};

/// target <- embed(op) * target, without materialising the embedding.
void apply_local(const LocalOperator& op, const HilbertSpace& space, ComplexMatrix& target);
void apply_local(const LocalOperator& op, const HilbertSpace& space, std::vector<cplx>& state);

/// Eigendecomposition H = V diag(lambda) V^dagger of a Hermitian matrix.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(const ComplexMatrix& hermitian);

  std::size_t dim() const { return eigenvalues_.size(); }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  /// Row m is the m-th normalised eigenvector.
  const ComplexMatrix& eigenvector_rows() const { return eigvecs_; }

  /// exp(-i H t)
  ComplexMatrix propagator(double t) const;
  /// v <- exp(-i H t) v
  void evolve_in_place(std::vector<cplx>& v, double t) const;

 private:
  std::vector<double> eigenvalues_;
  ComplexMatrix eigvecs_;
};

/// exp(-iHt)|state>, t >= 0 and finite. Exact up to the eigensolver's
/// rounding; the Hamiltonian must be time independent.
StateVector evolve(const StateVector& state, const HermitianOperator& h, double t);

/// exp(-iHt) for any finite t.
UnitaryMatrix propagator(const HermitianOperator& h, double t);

/// |Tr(P u^dagger v P)|^2 / d^2 with P the projector onto the listed basis
/// states. Equals 1 iff u and v agree on the subspace up to a global phase.
double process_fidelity(const ComplexMatrix& u, const ComplexMatrix& v,
                        std::span<const std::size_t> subspace);
double process_fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v,
                        std::span<const std::size_t> subspace);

/// Entrywise agreement (phases included) of the columns of u and v indexed by
/// the subspace.
bool exact_match(const UnitaryMatrix& u, const UnitaryMatrix& v,
                 std::span<const std::size_t> subspace, double tol);

}  // namespace gatesim
