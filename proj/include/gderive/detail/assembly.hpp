#pragma once

// Linear-system assembly shared by the numeric solvers and the symbolic sl2
// ideals. Unknown D is an n x n matrix flattened row-major: D(r, c) is
// unknown r*n + c. Coefficients live in T (Rational or MultiPoly).

#include <vector>

#include "gderive/lie_algebra.hpp"
#include "gderive/matrix.hpp"

namespace gderive {

enum class PairScope {
  all_ordered,   // every (i, j), including i == j
  off_diagonal,  // i != j only
  upper,         // i < j only; sound when the identity is antisymmetric
};

namespace detail {

template <class T>
using Rows = std::vector<std::vector<T>>;

inline bool pair_in_scope(PairScope scope, std::size_t i, std::size_t j) {
  switch (scope) {
    case PairScope::all_ordered: return true;
    case PairScope::off_diagonal: return i != j;
    case PairScope::upper: return i < j;
  }
  return true;
}

// Appends rows for a * D([e_i, e_j]) - [D e_i, S e_j] - [R e_i, D e_j] = 0,
// one row per (pair, output coordinate k). Zero rows are dropped.
template <class T>
void append_bilinear_identity(Rows<T>& rows, const LieAlgebra& g, const T& a,
                              const BasicMatrix<T>& S, const BasicMatrix<T>& R,
                              PairScope scope) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!pair_in_scope(scope, i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<T> row(n * n);
        if (!is_zero(a))
          for (std::size_t m = 0; m < n; ++m)
            if (!g.constant(i, j, m).is_zero()) row[k * n + m] += a * g.constant(i, j, m);
        // -[D e_i, S e_j]_k: coefficient of D(p, i) is -sum_q S(q, j) c_{pq}^k
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            const Rational& c = g.constant(p, q, k);
            if (c.is_zero() || is_zero(S(q, j))) continue;
            row[p * n + i] -= S(q, j) * c;
          }
        // -[R e_i, D e_j]_k: coefficient of D(q, j) is -sum_p R(p, i) c_{pq}^k
        for (std::size_t p = 0; p < n; ++p) {
          if (is_zero(R(p, i))) continue;
          for (std::size_t q = 0; q < n; ++q) {
            const Rational& c = g.constant(p, q, k);
            if (c.is_zero()) continue;
            row[q * n + j] -= R(p, i) * c;
          }
        }
        bool nonzero = false;
        for (const auto& x : row)
          if (!is_zero(x)) { nonzero = true; break; }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
}

// Rows for D*M - M*D = 0.
template <class T>
void append_commutation(Rows<T>& rows, const BasicMatrix<T>& M) {
  const std::size_t n = M.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<T> row(n * n);
      for (std::size_t m = 0; m < n; ++m) {
        if (!is_zero(M(m, c))) row[r * n + m] += M(m, c);
        if (!is_zero(M(r, m))) row[m * n + c] -= M(r, m);
      }
      bool nonzero = false;
      for (const auto& x : row)
        if (!is_zero(x)) { nonzero = true; break; }
      if (nonzero) rows.push_back(std::move(row));
    }
}

inline Matrix rows_to_matrix(const Rows<Rational>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace detail
}  // namespace gderive
