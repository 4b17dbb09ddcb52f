#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gderive/matrix.hpp"
#include "gderive/subspace.hpp"

namespace gderive {

// [e_left, e_right] = result, indices 0-based with left < right.
struct BracketEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  Vector result;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::size_t dim, const std::vector<BracketEntry>& brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  bool lie_validated() const { return validated_; }

  // c_{ij}^k, with the antisymmetric extension to all (i, j).
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim_ + j) * dim_ + k];
  }
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  // Nonzero products with i < j.
  std::vector<BracketEntry> brackets() const;

  // Copy flagged as validated; throws NotLieAlgebra if Jacobi fails.
  LieAlgebra validated() const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Rational> tensor_;
  bool validated_ = false;
};

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  Vector residual;
};

std::vector<JacobiViolation> validate_lie(const LieAlgebra& g);

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);
Matrix ad(const LieAlgebra& g, const Vector& x);
Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Vector& x);
Subspace derived_subalgebra(const LieAlgebra& g);
bool is_perfect(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);
bool is_automorphism(const LieAlgebra& g, const Matrix& m);

// Structure constants of a subalgebra h in the coordinates of h's canonical basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& h);

// sl2, heisenberg, solvable_1_2, abelian(n).
LieAlgebra builtin(std::string_view name);

// A matrix certified to be an automorphism of an algebra of dimension dim().
class Automorphism {
 public:
  static Automorphism make(const LieAlgebra& g, const Matrix& m);
  static Automorphism identity(std::size_t n);

  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse() const { return inverse_; }
  std::size_t dim() const { return matrix_.rows(); }

  bool operator==(const Automorphism& o) const { return matrix_ == o.matrix_; }

 private:
  Automorphism(Matrix m, Matrix inv) : matrix_(std::move(m)), inverse_(std::move(inv)) {}
  Matrix matrix_;
  Matrix inverse_;
};

}  // namespace gderive
