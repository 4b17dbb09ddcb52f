#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gderive/error.hpp"
#include "gderive/rational.hpp"

namespace gderive {

// Dense row-major matrix. Column c holds the coordinates of the image of e_c.
template <class T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static BasicMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    BasicMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_)
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const BasicMatrix&) const = default;

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  BasicMatrix operator-() const {
    BasicMatrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    BasicMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (is_zero(b(k, j))) continue;
          m(i, j) += aik * b(k, j);
        }
      }
    return m;
  }

  template <class S>
  BasicMatrix scaled(const S& s) const {
    BasicMatrix m = *this;
    for (auto& x : m.data_) x = x * s;
    return m;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_)
      throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  void require_same_shape(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<Rational>;
using Vector = std::vector<Rational>;

Matrix identity(std::size_t n);
Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix diagonal(const Vector& entries);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);
bool is_zero_matrix(const Matrix& m);

// Entries given as rational strings; convenient for tests and tables.
Matrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);
Rational determinant(const Matrix& m);
Matrix power(const Matrix& m, long k);
bool is_nilpotent(const Matrix& m);
Matrix exp_nilpotent(const Matrix& m);
std::optional<std::size_t> matrix_order(const Matrix& m, std::size_t max_m);

// Particular solution of m·x = b with free variables set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Coefficients c_0..c_n of det(λI − m), c_n = 1.
std::vector<Rational> characteristic_polynomial(const Matrix& m);
// Distinct rational roots of a polynomial given by ascending coefficients.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

// Row-major flattening to n² coordinates: entry (r,c) sits at r*cols+c.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

// exp of a nilpotent matrix over any commutative coefficient type.
template <class T>
BasicMatrix<T> exp_nilpotent_generic(const BasicMatrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  BasicMatrix<T> result(n, n);
  for (std::size_t i = 0; i < n; ++i) result(i, i) = one;
  BasicMatrix<T> term = result;
  for (std::size_t k = 1; k <= n; ++k) {
    term = (term * m).scaled(Rational(1, static_cast<long>(k)));
    result += term;
  }
  return result;
}

}  // namespace gderive
