#pragma once

// Test-side references that do not go through the library's elimination or
// equation assembly.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gderive/lie_algebra.hpp"
#include "gderive/poly.hpp"

namespace oracle {

using gderive::Matrix;
using gderive::Rational;
using gderive::Vector;
using Rows = std::vector<std::vector<Rational>>;

// Fraction-free Gaussian elimination on integer-scaled rows.
inline std::size_t bareiss_rank(const Rows& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows.front().size();
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < m; ++r) {
    mpz_class den = 1;
    for (const auto& x : rows[r]) den = lcm(den, x.denominator());
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = rows[r][c].numerator() * (den / rows[r][c].denominator());
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t k = c + 1; k < n; ++k)
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline Rows matrix_rows(const Matrix& m) {
  Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

inline std::size_t bareiss_rank(const Matrix& m) { return bareiss_rank(matrix_rows(m)); }

// Linear system for D([x,y]) = [D x, sigma y] + [tau x, D y] built by
// evaluating the identity on each elementary matrix E_rc, unknown r*n + c.
inline Rows identity_system(const gderive::LieAlgebra& g, const Matrix& sigma, const Matrix& tau) {
  const std::size_t n = g.dim();
  Rows rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ei = gderive::unit_vector(n, i), ej = gderive::unit_vector(n, j);
      std::vector<Vector> images(n * n);
      for (std::size_t u = 0; u < n * n; ++u) {
        Matrix E = gderive::zero_matrix(n, n);
        E(u / n, u % n) = 1;
        Vector lhs = E.apply(gderive::bracket(g, ei, ej));
        Vector a = gderive::bracket(g, E.apply(ei), sigma.apply(ej));
        Vector b = gderive::bracket(g, tau.apply(ei), E.apply(ej));
        for (std::size_t k = 0; k < n; ++k) lhs[k] -= a[k] + b[k];
        images[u] = lhs;
      }
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n);
        for (std::size_t u = 0; u < n * n; ++u) row[u] = images[u][k];
        rows.push_back(row);
      }
    }
  return rows;
}

inline std::size_t derivation_dim(const gderive::LieAlgebra& g, const Matrix& sigma, const Matrix& tau) {
  const std::size_t n = g.dim();
  return n * n - bareiss_rank(identity_system(g, sigma, tau));
}

// The sixteen equations for D = (a_ij)^t in Der_sigma(sl2), sigma = exp(D_b),
// typed by hand; a_ij is the coefficient of e_j in D(e_i).
inline const std::vector<std::string>& sl2_b_equations() {
  static const std::vector<std::string> eqs = {
      "2*x21*y - x22*y^2 + 2*x31", "x12 + 2*x13*y + 2*x23",
      "2*x21 + 2*x23*y^2 + x32",   "x13",
      "2*x21 + x32",               "x12*y - x22",
      "x12 + 2*x23",               "2*x11*y - x12*y^2 - 2*x21 - x32",
      "-x11 + x22 - x33",          "x12 + 2*x23",
      "x12 - 2*x13*y + 2*x23",     "x11 + x13*y^2 - x22 + x33",
      "x22 + 2*x23*y",             "x22",
      "-2*x31 + x32*y",            "2*x21 + x32 + 2*x33*y",
  };
  return eqs;
}

// Rows of the hand-typed equations at a fixed b, over D's row-major entries.
inline Rows sl2_b_rows(const Rational& b) {
  auto ring = gderive::make_ring({"x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33", "y"});
  Rows rows;
  for (const auto& s : sl2_b_equations()) {
    gderive::MultiPoly p = gderive::parse_poly(ring, s);
    std::vector<Rational> row(9);
    for (std::size_t v = 0; v < 9; ++v) {
      // Coefficient of x_v: evaluate with x_v = 1, other x = 0, y = b.
      std::vector<Rational> point(10);
      point[v] = 1;
      point[9] = b;
      const std::string& name = ring->names()[v];
      std::size_t i = static_cast<std::size_t>(name[1] - '1'), j = static_cast<std::size_t>(name[2] - '1');
      row[j * 3 + i] = p.evaluate(point);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace oracle
