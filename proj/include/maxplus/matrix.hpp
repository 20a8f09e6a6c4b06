#pragma once

// Dense max-plus vectors and matrices. Indices are 0-based in the API;
// text output (see io.hpp) is 1-based.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

class Vector {
 public:
  Vector() = default;
  /// n bottom entries.
  explicit Vector(std::size_t n) : entries_(n) {}
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Indices of finite entries, ascending.
  std::vector<std::size_t> support() const;
  bool is_zero() const;
  bool has_full_support() const;

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector& a, const Vector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Scalar> entries_;
};

class Matrix {
 public:
  Matrix() = default;
  /// rows x cols, all bottom.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  /// Submatrix on the given row/column index lists.
  Matrix submatrix(const std::vector<std::size_t>& row_ids,
                   const std::vector<std::size_t>& col_ids) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix identity_matrix(std::size_t n);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, const Vector& x);
/// m-fold product; A^0 = I.
Matrix mat_pow(const Matrix& a, std::size_t m);

Vector vec_add(const Vector& x, const Vector& y);
Vector scale(const Scalar& alpha, const Vector& x);
/// Every finite entry shifted by an exact rational.
Matrix shifted(const Matrix& a, const Rational& delta);

/// lambda with x = lambda (x) y, if it exists.
std::optional<Scalar> is_proportional(const Vector& x, const Vector& y);

/// Exactly one finite entry in each row and column.
bool is_invertible(const Matrix& a);

/// Scales x so its last finite coordinate is 0. Throws ZeroVector.
Vector normalized(const Vector& x);

/// Max over the finite entries; bottom if there are none.
Scalar max_finite_entry(const Matrix& a);

void require_square(const Matrix& a, const char* what);

}  // namespace maxplus
