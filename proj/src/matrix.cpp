#include "gderive/matrix.hpp"

#include <algorithm>
#include <set>

namespace gderive {

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix diagonal(const Vector& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool is_zero_matrix(const Matrix& m) { return is_zero_vector(m.data()); }

Matrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> parsed;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& s : row) r.push_back(Rational::parse(s));
    parsed.push_back(std::move(r));
  }
  return Matrix::from_rows(parsed);
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix power(const Matrix& m, long k) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  Matrix base = k < 0 ? inverse(m) : m;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Matrix result = identity(m.rows());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) return false;
  return is_zero_matrix(power(m, static_cast<long>(m.rows())));
}

Matrix exp_nilpotent(const Matrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "exp of a non-square matrix");
  if (!is_nilpotent(m)) throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
  return exp_nilpotent_generic(m, Rational(1));
}

std::optional<std::size_t> matrix_order(const Matrix& m, std::size_t max_m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "order of a non-square matrix");
  const Matrix id = identity(m.rows());
  Matrix p = m;
  for (std::size_t k = 1; k <= max_m; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  const std::size_t cols = m.cols();
  Matrix aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
  }
  RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == cols) return std::nullopt;
  Vector x(cols);
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, cols);
  return x;
}

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk = zero_matrix(n, n);
  const Matrix id = identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id.scaled(c[n - k + 1]);
    Matrix amk = m * mk;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> p = coeffs;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  std::set<Rational> roots;
  if (p.size() <= 1) return {};
  std::size_t shift = 0;
  while (p[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.insert(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(shift));
  }
  if (p.size() > 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : p) lcm_den = lcm(lcm_den, c.denominator());
    std::vector<mpz_class> ints;
    for (const auto& c : p) ints.push_back(mpz_class(c.raw() * lcm_den));
    for (const auto& num : positive_divisors(ints.front()))
      for (const auto& den : positive_divisors(ints.back()))
        for (int s : {1, -1}) {
          Rational cand(mpq_class(mpz_class(s * num), den));
          if (evaluate(p, cand).is_zero()) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

Vector flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "cannot reshape vector");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

}  // namespace gderive
