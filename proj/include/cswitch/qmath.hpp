#pragma once

// Dense complex linear algebra for the 2- and 4-dimensional states and
// operators used throughout the library. Everything here is a value type;
// all free functions are pure.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cswitch/errors.hpp"

namespace cswitch {

using Complex = std::complex<double>;

/// Default absolute tolerance for matrix comparisons.
inline constexpr double kDefaultTol = 1e-12;

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero-filled rows x cols matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Column state vector. Not forced to be normalized: branch amplitudes and
/// port amplitudes are legitimately sub-normalized.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim);
  explicit StateVector(std::vector<Complex> amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Computational basis state |index> in `dim` dimensions.
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  double norm_squared() const;
  bool is_normalized(double tol = 1e-10) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<Complex> amplitudes_;
};

// Kronecker product; dims multiply.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// Throws DimensionMismatch when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector apply(const ComplexMatrix& m, const StateVector& v);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& m);
StateVector operator*(const ComplexMatrix& m, const StateVector& v);
StateVector operator*(Complex s, const StateVector& v);
StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);

ComplexMatrix adjoint(const ComplexMatrix& m);

/// ab - ba. Both operands must be square with equal dims.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// ab + ba.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const StateVector& a, const StateVector& b);
double max_abs(const ComplexMatrix& m);

bool is_zero(const ComplexMatrix& m, double tol = kDefaultTol);

/// True iff a = c*b for some |c| = 1 within `tol` (max-norm). The phase c is
/// taken from the entry of b with the largest modulus.
bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                              double tol = kDefaultTol);

/// ||a^dagger a - I||_max <= tol. Non-square matrices are never unitary.
bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTol);

std::string to_string(const ComplexMatrix& m);

namespace gates {
const ComplexMatrix& I();
const ComplexMatrix& X();
const ComplexMatrix& Y();
const ComplexMatrix& Z();
const ComplexMatrix& H();
}  // namespace gates

namespace kets {
const StateVector& zero();
const StateVector& one();
const StateVector& plus();
const StateVector& minus();
}  // namespace kets

}  // namespace cswitch
