#pragma once

#include <optional>
#include <vector>

#include "gderive/matrix.hpp"

namespace gderive {

// Linear subspace of Q^n stored as the nonzero rows of an RREF matrix, so
// equal subspaces compare equal as values.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in basis(); absent when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  // Rows spanning the annihilator: v is in the subspace iff every row kills v.
  Matrix equations() const;

  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
// Stack the vectors as columns.
Matrix columns_matrix(const std::vector<Vector>& vectors, std::size_t rows);

}  // namespace gderive
