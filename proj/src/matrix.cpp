#include "maxplus/matrix.hpp"

#include <string>

#include "maxplus/error.hpp"

namespace maxplus {

std::vector<std::size_t> Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].is_finite()) out.push_back(i);
  return out;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_)
    if (e.is_finite()) return false;
  return true;
}

bool Vector::has_full_support() const {
  for (const auto& e : entries_)
    if (e.is_bottom()) return false;
  return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      fail(ErrorKind::kDimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return Matrix();
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows())
      fail(ErrorKind::kDimensionMismatch, "columns of unequal length");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_ids,
                         const std::vector<std::size_t>& col_ids) const {
  Matrix m(row_ids.size(), col_ids.size());
  for (std::size_t a = 0; a < row_ids.size(); ++a)
    for (std::size_t b = 0; b < col_ids.size(); ++b)
      m(a, b) = (*this)(row_ids[a], col_ids[b]);
  return m;
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square())
    fail(ErrorKind::kDimensionMismatch,
         std::string(what) + ": matrix must be square, got " +
             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::unit();
  return m;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::kDimensionMismatch, "mat_add: dimensions differ");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = oplus(a(i, j), b(i, j));
  return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorKind::kDimensionMismatch, "mat_mul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_bottom()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = oplus(c(i, j), otimes(a(i, k), b(k, j)));
    }
  return c;
}

Vector mat_vec(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size())
    fail(ErrorKind::kDimensionMismatch, "mat_vec: dimensions differ");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] = oplus(y[i], otimes(a(i, j), x[j]));
  return y;
}

Matrix mat_pow(const Matrix& a, std::size_t m) {
  require_square(a, "mat_pow");
  Matrix result = identity_matrix(a.rows());
  Matrix base = a;
  while (m > 0) {
    if (m & 1U) result = mat_mul(result, base);
    m >>= 1U;
    if (m > 0) base = mat_mul(base, base);
  }
  return result;
}

Vector vec_add(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    fail(ErrorKind::kDimensionMismatch, "vec_add: lengths differ");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = oplus(x[i], y[i]);
  return z;
}

Vector scale(const Scalar& alpha, const Vector& x) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = otimes(alpha, x[i]);
  return z;
}

Matrix shifted(const Matrix& a, const Rational& delta) {
  Matrix c = a;
  const Scalar d(delta);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = otimes(a(i, j), d);
  return c;
}

std::optional<Scalar> is_proportional(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) return std::nullopt;
  std::optional<Rational> diff;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_bottom() != y[i].is_bottom()) return std::nullopt;
    if (x[i].is_bottom()) continue;
    Rational d = x[i].value() - y[i].value();
    if (!diff) {
      diff = d;
    } else if (*diff != d) {
      return std::nullopt;
    }
  }
  // Two zero vectors: any scalar works, 0 is the canonical choice.
  return Scalar(diff.value_or(Rational(0)));
}

bool is_invertible(const Matrix& a) {
  require_square(a, "is_invertible");
  const std::size_t n = a.rows();
  std::vector<int> row_count(n, 0), col_count(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite()) {
        ++row_count[i];
        ++col_count[j];
      }
  for (std::size_t i = 0; i < n; ++i)
    if (row_count[i] != 1 || col_count[i] != 1) return false;
  return true;
}

Vector normalized(const Vector& x) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i].is_finite()) return scale(inverse(x[i]), x);
  }
  fail(ErrorKind::kZeroVector, "cannot normalize the zero vector");
}

Scalar max_finite_entry(const Matrix& a) {
  Scalar best;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) best = oplus(best, a(i, j));
  return best;
}

}  // namespace maxplus
