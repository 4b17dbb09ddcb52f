#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gderive/detail/assembly.hpp"
#include "gderive/lie_algebra.hpp"
#include "gderive/subspace.hpp"

namespace gderive {

enum class DerivationKind { plain, plus, minus };

std::string_view kind_name(DerivationKind kind);
DerivationKind parse_kind(std::string_view text);

struct DerivationSpace {
  Matrix sigma;
  Matrix tau;
  DerivationKind kind = DerivationKind::plain;
  std::vector<Matrix> generators;  // minus kind only
  Subspace coordinates;            // in n^2 row-major coordinates
  std::vector<Matrix> basis;       // canonical RREF order

  std::size_t dimension() const { return basis.size(); }
  bool contains(const Matrix& m) const { return coordinates.contains(flatten(m)); }
};

// D([x,y]) = [D x, sigma y] + [tau x, D y] on every ordered basis pair.
bool is_derivation_pair(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                        const Automorphism& tau);

// Default scope solves the identity on all ordered pairs. off_diagonal drops
// i == j, which is only equivalent when sigma == tau.
DerivationSpace derivation_space(const LieAlgebra& g, const Automorphism& sigma,
                                 const Automorphism& tau,
                                 PairScope scope = PairScope::all_ordered);
DerivationSpace plus_interior(const LieAlgebra& g, const Automorphism& sigma);
DerivationSpace minus_interior(const LieAlgebra& g, const Automorphism& sigma,
                               const std::vector<Automorphism>& gens);

DerivationSpace centroid(const LieAlgebra& g, PairScope scope = PairScope::all_ordered);
bool is_centroid_element(const LieAlgebra& g, const Matrix& D);

Matrix twist(const Matrix& D, const Automorphism& tau);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix sigma_bracket(const Matrix& D, const Matrix& T, const Automorphism& sigma);

// t[i][j] = D^{-1}([sigma e_i, D e_j]).
struct ProductTable {
  std::size_t dim = 0;
  std::vector<Vector> table;  // index i*dim + j

  const Vector& at(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
};

ProductTable left_symmetric_product(const LieAlgebra& g, const Matrix& D,
                                    const Automorphism& sigma);
bool is_left_symmetric(const ProductTable& t);

Matrix phi_x_sigma(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                   const Vector& x);
// {D in Der_sigma(g) : D(x) in Z(g)}
DerivationSpace kernel_phi(const LieAlgebra& g, const Automorphism& sigma, const Vector& x);

// T with [D x, y] + [x, D y] = T([x, y]) for all x, y; absent when D is not a
// quasiderivation.
std::optional<Matrix> quasiderivation_witness(const LieAlgebra& g, const Matrix& D);

// alpha D[x,y] = beta [D x, y] + gamma [x, D y]
Subspace abg_space(const LieAlgebra& g, const Rational& alpha, const Rational& beta,
                   const Rational& gamma);
std::vector<Matrix> subspace_matrices(const Subspace& s, std::size_t n);

DerivationSpace stabilized_space(const LieAlgebra& g, const Automorphism& sigma,
                                 const Subspace& h);
// Induced map on h in the coordinates of h's canonical basis.
Matrix restrict_to(const Matrix& D, const Subspace& h);
Matrix tilde_map(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                 const Vector& x0, const Subspace& h);
// ad(x0) restricted to h, in h-coordinates.
Matrix restricted_ad(const LieAlgebra& g, const Vector& x0, const Subspace& h);

Matrix commutator_with_sigma(const Matrix& D, const Automorphism& sigma);
bool derived_in_kernel(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma);

struct IntersectionReport {
  std::size_t dim_sigma = 0;
  std::size_t dim_tau = 0;
  std::size_t dim_intersection = 0;
  std::vector<Matrix> intersection_basis;
  std::optional<Vector> witness;
  std::optional<bool> witness_in_centralizer;  // (sigma^{-1} tau)(w) in Z_w(g)
};

IntersectionReport intersection_report(const LieAlgebra& g, const Automorphism& sigma,
                                       const Automorphism& tau,
                                       const std::optional<Vector>& witness = std::nullopt);

struct PeriodicReport {
  bool nonabelian = false;
  bool in_der_sigma = false;
  std::optional<std::size_t> order;
  std::vector<Rational> rational_eigenvalues;
  // Rational eigenvalues lambda of D with a common eigenvector fixed by sigma.
  std::vector<Rational> fixed_eigenvalues;
  std::string verdict;
};

PeriodicReport periodic_check(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                              std::size_t max_m);

struct DirectSumReport {
  bool involutive = false;
  bool commutes_with_spaces = false;
  bool closed = false;
};

// Closure of Der(g) + Der_sigma(g) under the commutator.
DirectSumReport direct_sum_closure(const LieAlgebra& g, const Automorphism& sigma);

}  // namespace gderive
