#include "fas/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fas/errors.hpp"

namespace fas {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

}  // namespace

double q_function(double z) {
  if (!std::isfinite(z)) throw DomainError("q_function: non-finite argument");
  return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double q_inverse(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("q_inverse: probability must lie in (0, 1)");

  // Q(-40) == 1 and Q(40) == 0 in double precision, so the root is bracketed.
  double lo = -40.0;
  double hi = 40.0;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (q_function(mid) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    const double slope = normal_pdf(z);
    if (slope <= 0.0) break;
    // Q'(z) = -pdf(z)
    const double step = (q_function(z) - p) / slope;
    z += step;
    if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

// ---------------------------------------------------------------------------

cplx& ComplexVector::at(std::size_t i) {
  if (i >= data_.size()) throw DimensionError("ComplexVector: index out of range");
  return data_[i];
}

const cplx& ComplexVector::at(std::size_t i) const {
  if (i >= data_.size()) throw DimensionError("ComplexVector: index out of range");
  return data_[i];
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& rhs) {
  require_same_size(size(), rhs.size(), "vector add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& rhs) {
  require_same_size(size(), rhs.size(), "vector subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

double ComplexVector::squared_norm() const {
  double acc = 0.0;
  for (const auto& x : data_) acc += std::norm(x);
  return acc;
}

double ComplexVector::norm() const { return std::sqrt(squared_norm()); }

ComplexVector ComplexVector::conj() const {
  ComplexVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = std::conj(data_[i]);
  return out;
}

ComplexVector ComplexVector::unit(std::size_t n, std::size_t index) {
  ComplexVector e(n);
  e.at(index) = 1.0;
  return e;
}

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs) { return lhs += rhs; }
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs) { return lhs -= rhs; }
ComplexVector operator*(cplx s, ComplexVector v) { return v *= s; }

cplx inner(const ComplexVector& u, const ComplexVector& v) {
  require_same_size(u.size(), v.size(), "inner product");
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

// ---------------------------------------------------------------------------

ComplexVector ComplexMatrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("ComplexMatrix: column index out of range");
  ComplexVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ComplexMatrix::set_column(std::size_t c, const ComplexVector& v) {
  if (c >= cols_) throw DimensionError("ComplexMatrix: column index out of range");
  require_same_size(rows_, v.size(), "set_column");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_size(rows_, rhs.rows_, "matrix add (rows)");
  require_same_size(cols_, rhs.cols_, "matrix add (cols)");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

double ComplexMatrix::hermitian_defect() const {
  if (rows_ != cols_) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const ComplexVector& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& u, const ComplexVector& v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  require_same_size(m.cols(), v.size(), "matrix-vector product");
  ComplexVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cplx acc{0.0, 0.0};
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a.cols(), b.rows(), "matrix product");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx a_rk = a(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a_rk * b(k, c);
    }
  return out;
}

ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }

double hermitian_quadratic_form(const ComplexVector& v, const ComplexMatrix& m) {
  require_same_size(m.rows(), m.cols(), "quadratic form (square)");
  require_same_size(m.cols(), v.size(), "quadratic form");

  cplx acc{0.0, 0.0};
  double scale = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const cplx term = std::conj(v[r]) * m(r, c) * v[c];
      acc += term;
      scale += std::abs(term);
    }
  }
  if (std::abs(acc.imag()) > 1e-12 * scale) {
    throw ContractError("hermitian_quadratic_form: matrix is not Hermitian");
  }
  return acc.real();
}

}  // namespace fas
