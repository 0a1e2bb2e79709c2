#include "cswitch/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cswitch {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows()
        << "x" << b.cols();
    throw DimensionMismatch(msg.str());
  }
}

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  require_same_shape(a, b, op);
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + ": operands must be square");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("ComplexMatrix: entry count does not match rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionMismatch("ComplexMatrix: ragged initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  std::size_t i = 0;
  for (const auto& d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

StateVector::StateVector(std::size_t dim) : amplitudes_(dim) {}
StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}
StateVector::StateVector(std::initializer_list<Complex> amplitudes) : amplitudes_(amplitudes) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis index out of range");
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "matmul: inner dimensions differ (" << a.rows() << "x" << a.cols() << " * "
        << b.rows() << "x" << b.cols() << ")";
    throw DimensionMismatch(msg.str());
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

StateVector apply(const ComplexMatrix& m, const StateVector& v) {
  if (m.cols() != v.dim()) {
    throw DimensionMismatch("apply: matrix columns do not match state dimension");
  }
  StateVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  std::vector<Complex> e(m.entries().begin(), m.entries().end());
  for (auto& x : e) x *= s;
  return ComplexMatrix(m.rows(), m.cols(), std::move(e));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& m) { return Complex(-1.0) * m; }

StateVector operator*(const ComplexMatrix& m, const StateVector& v) { return apply(m, v); }

StateVector operator*(Complex s, const StateVector& v) {
  StateVector out = v;
  for (std::size_t i = 0; i < out.dim(); ++i) out[i] *= s;
  return out;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("state add: dimension mismatch");
  StateVector out = a;
  for (std::size_t i = 0; i < out.dim(); ++i) out[i] += b[i];
  return out;
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("state subtract: dimension mismatch");
  StateVector out = a;
  for (std::size_t i = 0; i < out.dim(); ++i) out[i] -= b[i];
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_square(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_square(a, b, "anticommutator");
  return a * b + b * a;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner: dimension mismatch");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs(const ComplexMatrix& m) {
  double worst = 0.0;
  for (const auto& x : m.entries()) worst = std::max(worst, std::abs(x));
  return worst;
}

bool is_zero(const ComplexMatrix& m, double tol) { return max_abs(m) <= tol; }

bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_shape(a, b, "equal_up_to_global_phase");
  std::size_t ref = 0;
  double ref_mag = 0.0;
  for (std::size_t i = 0; i < b.entries().size(); ++i) {
    const double mag = std::abs(b.entries()[i]);
    if (mag > ref_mag) {
      ref_mag = mag;
      ref = i;
    }
  }
  if (ref_mag <= tol) return max_abs(a) <= tol;

  const Complex ratio = a.entries()[ref] / b.entries()[ref];
  const double ratio_mag = std::abs(ratio);
  const Complex phase = ratio_mag == 0.0 ? Complex(1.0) : ratio / ratio_mag;
  return max_abs_diff(a, phase * b) <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square() || a.rows() == 0) return false;
  return max_abs_diff(adjoint(a) * a, ComplexMatrix::identity(a.rows())) <= tol;
}

std::string to_string(const ComplexMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex& x = m(r, c);
      os << (c ? ", " : "") << x.real() << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag())
         << "i";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace gates {

const ComplexMatrix& I() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

const ComplexMatrix& X() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

const ComplexMatrix& Y() {
  static const ComplexMatrix m{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
  return m;
}

const ComplexMatrix& Z() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

const ComplexMatrix& H() {
  static const double s = 1.0 / std::sqrt(2.0);
  static const ComplexMatrix m{{s, s}, {s, -s}};
  return m;
}

}  // namespace gates

namespace kets {

const StateVector& zero() {
  static const StateVector v{1.0, 0.0};
  return v;
}

const StateVector& one() {
  static const StateVector v{0.0, 1.0};
  return v;
}

const StateVector& plus() {
  static const double s = 1.0 / std::sqrt(2.0);
  static const StateVector v{s, s};
  return v;
}

const StateVector& minus() {
  static const double s = 1.0 / std::sqrt(2.0);
  static const StateVector v{s, -s};
  return v;
}

}  // namespace kets

}  // namespace cswitch
