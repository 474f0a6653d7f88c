#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fas {

using cplx = std::complex<double>;

/// Upper tail of the standard normal, Q(z) = 0.5 * erfc(z / sqrt(2)).
/// Throws DomainError for non-finite z.
double q_function(double z);

/// Inverse of q_function on (0, 1). Bracketing bisection to width 1e-6,
/// then Newton steps against q_function. Throws DomainError outside (0, 1).
double q_inverse(double p);

/// Standard normal density.
double normal_pdf(double z);

// Small dense complex vector. Size is fixed at construction.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t n, cplx fill = {0.0, 0.0}) : data_(n, fill) {}
  ComplexVector(std::initializer_list<cplx> values) : data_(values) {}
  explicit ComplexVector(std::vector<cplx> values) : data_(std::move(values)) {}

  std::size_t size() const noexcept { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  cplx& at(std::size_t i);
  const cplx& at(std::size_t i) const;

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  ComplexVector& operator+=(const ComplexVector& rhs);
  ComplexVector& operator-=(const ComplexVector& rhs);
  ComplexVector& operator*=(cplx s);

  double norm() const;
  double squared_norm() const;
  ComplexVector conj() const;

  static ComplexVector unit(std::size_t n, std::size_t index);

 private:
  std::vector<cplx> data_;
};

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator*(cplx s, ComplexVector v);

/// <u, v> = u^H v. Throws DimensionError on size mismatch.
cplx inner(const ComplexVector& u, const ComplexVector& v);

// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, cplx fill = {0.0, 0.0})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexVector column(std::size_t c) const;
  void set_column(std::size_t c, const ComplexVector& v);

  ComplexMatrix adjoint() const;
  ComplexMatrix& operator*=(cplx s);
  ComplexMatrix& operator+=(const ComplexMatrix& rhs);

  /// Max |M - M^H| entry.
  double hermitian_defect() const;

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const ComplexVector& d);
  /// u v^H
  static ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix m);

/// v^H M v for Hermitian M. The imaginary residue is checked against
/// 1e-12 relative to the magnitude scale of the sum, then discarded.
double hermitian_quadratic_form(const ComplexVector& v, const ComplexMatrix& m);

}  // namespace fas
