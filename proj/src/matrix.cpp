#include "mesostab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mesostab {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("DenseMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("DenseMatrix: shape mismatch in product");
  DenseMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

DenseMatrix DenseMatrix::submatrix(const std::vector<std::size_t>& row_set,
                                   const std::vector<std::size_t>& col_set) const {
  DenseMatrix out(row_set.size(), col_set.size());
  for (std::size_t i = 0; i < row_set.size(); ++i) {
    if (row_set[i] >= rows_) throw std::out_of_range("DenseMatrix::submatrix: row index");
    for (std::size_t j = 0; j < col_set.size(); ++j) {
      if (col_set[j] >= cols_) throw std::out_of_range("DenseMatrix::submatrix: column index");
      out(i, j) = (*this)(row_set[i], col_set[j]);
    }
  }
  return out;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("SymmetricMatrix: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(rows[i][j]))
        throw std::invalid_argument("SymmetricMatrix: non-finite entry");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw std::invalid_argument("SymmetricMatrix: entries (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") and (" + std::to_string(j + 1) +
                                    "," + std::to_string(i + 1) + ") differ");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_) throw std::out_of_range("SymmetricMatrix::set");
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) {
  set(i, j, (*this)(i, j) + value);
}

double SymmetricMatrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double SymmetricMatrix::row_sum_tolerance() const {
  return 1e-9 * static_cast<double>(n_) * max_abs();
}

bool SymmetricMatrix::has_zero_row_sums() const {
  const double tol = row_sum_tolerance();
  for (std::size_t i = 0; i < n_; ++i) {
    if (std::abs(row_sum(i)) > tol) return false;
  }
  return true;
}

SymmetricMatrix SymmetricMatrix::operator-() const {
  SymmetricMatrix out(*this);
  for (double& x : out.data_) x = -x;
  return out;
}

DenseMatrix SymmetricMatrix::dense() const {
  DenseMatrix d(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) d(i, j) = (*this)(i, j);
  return d;
}

DenseMatrix SymmetricMatrix::principal_submatrix(const VertexSet& s) const {
  if (!s.empty() && s.max() >= n_)
    throw std::out_of_range("principal_submatrix: index outside the matrix");
  DenseMatrix d(s.size(), s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) d(a, b) = (*this)(s[a], s[b]);
  return d;
}

std::vector<std::vector<double>> SymmetricMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

double SymmetricMatrix::quadratic_form(const std::vector<double>& v) const {
  if (v.size() != n_) throw std::invalid_argument("quadratic_form: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += v[i] * (*this)(i, j) * v[j];
  return s;
}

double determinant(DenseMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(m(r, k)) > std::abs(m(pivot, k))) pivot = r;
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    const double p = m(k, k);
    det *= p;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = m(r, k) / p;
      if (f == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

double hadamard_bound(const DenseMatrix& m) {
  double bound = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    bound *= std::sqrt(s);
  }
  return bound;
}

std::optional<std::vector<double>> solve(DenseMatrix m, std::vector<double> rhs,
                                         double pivot_floor) {
  const std::size_t n = m.rows();
  if (n != m.cols() || rhs.size() != n) throw std::invalid_argument("solve: shape mismatch");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
  const double floor = pivot_floor * std::max(scale, 1e-300);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(m(r, k)) > std::abs(m(pivot, k))) pivot = r;
    if (std::abs(m(pivot, k)) <= floor) return std::nullopt;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      std::swap(rhs[k], rhs[pivot]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
      rhs[r] -= f * rhs[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m(i, c) * x[c];
    x[i] = s / m(i, i);
  }
  return x;
}

}  // namespace mesostab
