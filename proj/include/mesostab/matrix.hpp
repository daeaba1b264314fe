#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mesostab/vertex_set.hpp"

namespace mesostab {

/// Row-major dense real matrix of arbitrary shape.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix transpose() const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;

  /// Rows `row_set` and columns `col_set`, both in increasing order.
  DenseMatrix submatrix(const std::vector<std::size_t>& row_set,
                        const std::vector<std::size_t>& col_set) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Dense real symmetric matrix. Every setter writes both (i,j) and (j,i), so
/// the stored entries are symmetric bit for bit.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  /// Throws std::invalid_argument if `rows` is ragged, not square, contains a
  /// non-finite value, or is not exactly symmetric.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymmetricMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  double row_sum(std::size_t i) const;
  double max_abs() const;

  /// 1e-9 * n * max|a_ij|.
  double row_sum_tolerance() const;
  bool has_zero_row_sums() const;

  SymmetricMatrix operator-() const;
  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

  DenseMatrix dense() const;
  DenseMatrix principal_submatrix(const VertexSet& s) const;
  std::vector<std::vector<double>> to_rows() const;

  /// v^T A v
  double quadratic_form(const std::vector<double>& v) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Determinant by Gaussian elimination with partial pivoting. The 0×0
/// determinant is 1.
double determinant(DenseMatrix m);

/// Product of the Euclidean row norms; bounds |det(m)| from above.
double hadamard_bound(const DenseMatrix& m);

/// Solves m x = rhs by LU with partial pivoting; nullopt when a pivot falls
/// below `pivot_floor` times the largest entry magnitude.
std::optional<std::vector<double>> solve(DenseMatrix m, std::vector<double> rhs,
                                         double pivot_floor = 1e-13);

}  // namespace mesostab
