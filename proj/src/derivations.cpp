#include "gderive/derivations.hpp"

namespace gderive {

using detail::Rows;

std::string_view kind_name(DerivationKind kind) {
  switch (kind) {
    case DerivationKind::plain: return "plain";
    case DerivationKind::plus: return "plus";
    case DerivationKind::minus: return "minus";
  }
  return "plain";
}

DerivationKind parse_kind(std::string_view text) {
  if (text == "plain") return DerivationKind::plain;
  if (text == "plus") return DerivationKind::plus;
  if (text == "minus") return DerivationKind::minus;
  throw Error(ErrorCode::UnknownName, "unknown derivation kind '" + std::string(text) + "'");
}

namespace {

void require_dim(const LieAlgebra& g, const Matrix& m, const char* what) {
  if (m.rows() != g.dim() || m.cols() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong size");
}

std::vector<Matrix> to_matrices(const Subspace& s, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& v : s.basis()) out.push_back(unflatten(v, n, n));
  return out;
}

DerivationSpace solve_space(const LieAlgebra& g, const Rows<Rational>& rows,
                            const Automorphism& sigma, const Automorphism& tau,
                            DerivationKind kind) {
  const std::size_t n = g.dim();
  DerivationSpace ds;
  ds.sigma = sigma.matrix();
  ds.tau = tau.matrix();
  ds.kind = kind;
  ds.coordinates = rows.empty() ? Subspace::full(n * n)
                                : kernel_basis(detail::rows_to_matrix(rows, n * n));
  ds.basis = to_matrices(ds.coordinates, n);
  return ds;
}

void append_twisted(Rows<Rational>& rows, const LieAlgebra& g, const Automorphism& sigma,
                    const Automorphism& tau, PairScope scope) {
  if (sigma.dim() != g.dim() || tau.dim() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "automorphism has the wrong size");
  // With sigma == tau the identity is antisymmetric in (i, j) and vanishes on
  // the diagonal, so i < j carries the whole system.
  if (scope == PairScope::all_ordered && sigma == tau) scope = PairScope::upper;
  detail::append_bilinear_identity(rows, g, Rational(1), sigma.matrix(), tau.matrix(), scope);
}

}  // namespace

std::vector<Matrix> subspace_matrices(const Subspace& s, std::size_t n) {
  return to_matrices(s, n);
}

bool is_derivation_pair(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                        const Automorphism& tau) {
  require_dim(g, D, "derivation");
  const std::size_t n = g.dim();
  if (sigma.dim() != n || tau.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "automorphism has the wrong size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = D.apply(g.bracket_basis(i, j));
      Vector a = bracket(g, D.column(i), sigma.matrix().column(j));
      Vector b = bracket(g, tau.matrix().column(i), D.column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != a[k] + b[k]) return false;
    }
  return true;
}

DerivationSpace derivation_space(const LieAlgebra& g, const Automorphism& sigma,
                                 const Automorphism& tau, PairScope scope) {
  Rows<Rational> rows;
  append_twisted(rows, g, sigma, tau, scope);
  return solve_space(g, rows, sigma, tau, DerivationKind::plain);
}

DerivationSpace plus_interior(const LieAlgebra& g, const Automorphism& sigma) {
  Rows<Rational> rows;
  const Automorphism id = Automorphism::identity(g.dim());
  append_twisted(rows, g, sigma, id, PairScope::all_ordered);
  detail::append_commutation(rows, sigma.matrix());
  return solve_space(g, rows, sigma, id, DerivationKind::plus);
}

DerivationSpace minus_interior(const LieAlgebra& g, const Automorphism& sigma,
                               const std::vector<Automorphism>& gens) {
  Rows<Rational> rows;
  const Automorphism id = Automorphism::identity(g.dim());
  append_twisted(rows, g, sigma, id, PairScope::all_ordered);
  for (const auto& t : gens) {
    if (t.dim() != g.dim())
      throw Error(ErrorCode::DimensionMismatch, "generator has the wrong size");
    detail::append_commutation(rows, t.matrix());
  }
  DerivationSpace ds = solve_space(g, rows, sigma, id, DerivationKind::minus);
  for (const auto& t : gens) ds.generators.push_back(t.matrix());
  return ds;
}

DerivationSpace centroid(const LieAlgebra& g, PairScope scope) {
  const std::size_t n = g.dim();
  const Matrix id = identity(n), zero = zero_matrix(n, n);
  Rows<Rational> rows;
  // D[x,y] - [D x, y] = 0 and D[x,y] - [x, D y] = 0
  detail::append_bilinear_identity(rows, g, Rational(1), id, zero, scope);
  detail::append_bilinear_identity(rows, g, Rational(1), zero, id, scope);
  const Automorphism aid = Automorphism::identity(n);
  return solve_space(g, rows, aid, aid, DerivationKind::plain);
}

bool is_centroid_element(const LieAlgebra& g, const Matrix& D) {
  require_dim(g, D, "map");
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = D.apply(g.bracket_basis(i, j));
      if (bracket(g, D.column(i), unit_vector(n, j)) != lhs) return false;
      if (bracket(g, unit_vector(n, i), D.column(j)) != lhs) return false;
    }
  return true;
}

Matrix twist(const Matrix& D, const Automorphism& tau) { return tau.inverse() * D; }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix sigma_bracket(const Matrix& D, const Matrix& T, const Automorphism& sigma) {
  const Matrix& si = sigma.inverse();
  return sigma.matrix() * commutator(si * D, si * T);
}

Vector ProductTable::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim || y.size() != dim)
    throw Error(ErrorCode::DimensionMismatch, "product arguments have the wrong length");
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rational s = x[i] * y[j];
      const Vector& t = at(i, j);
      for (std::size_t k = 0; k < dim; ++k)
        if (!t[k].is_zero()) out[k] += s * t[k];
    }
  }
  return out;
}

ProductTable left_symmetric_product(const LieAlgebra& g, const Matrix& D,
                                    const Automorphism& sigma) {
  require_dim(g, D, "derivation");
  const Matrix Dinv = inverse(D);
  const std::size_t n = g.dim();
  ProductTable t{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.table.push_back(Dinv.apply(bracket(g, sigma.matrix().column(i), D.column(j))));
  return t;
}

bool is_left_symmetric(const ProductTable& t) {
  const std::size_t n = t.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector lhs = t.multiply(t.at(i, j), ek);
        Vector l2 = t.multiply(ei, t.multiply(ej, ek));
        Vector rhs = t.multiply(t.at(j, i), ek);
        Vector r2 = t.multiply(ej, t.multiply(ei, ek));
        for (std::size_t m = 0; m < n; ++m)
          if (lhs[m] - l2[m] != rhs[m] - r2[m]) return false;
      }
  return true;
}

Matrix phi_x_sigma(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                   const Vector& x) {
  return ad(g, sigma.inverse().apply(D.apply(x)));
}

DerivationSpace kernel_phi(const LieAlgebra& g, const Automorphism& sigma, const Vector& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector has the wrong length");
  Rows<Rational> rows;
  const Automorphism id = Automorphism::identity(n);
  append_twisted(rows, g, sigma, id, PairScope::all_ordered);
  // [D x, e_j] = 0 for all j: coefficient of D(p, c) in coordinate k is x_c c_{pj}^k
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> row(n * n);
      bool nonzero = false;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t c = 0; c < n; ++c) {
          Rational v = x[c] * g.constant(p, j, k);
          if (v.is_zero()) continue;
          row[p * n + c] += v;
          nonzero = true;
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  return solve_space(g, rows, sigma, id, DerivationKind::plain);
}

std::optional<Matrix> quasiderivation_witness(const LieAlgebra& g, const Matrix& D) {
  require_dim(g, D, "map");
  const std::size_t n = g.dim();
  Rows<Rational> rows;
  Vector rhs;
  // T([e_i, e_j]) = [D e_i, e_j] + [e_i, D e_j]; antisymmetric in (i, j).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector target = bracket(g, D.column(i), unit_vector(n, j));
      Vector other = bracket(g, unit_vector(n, i), D.column(j));
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n);
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] = g.constant(i, j, m);
        rows.push_back(std::move(row));
        rhs.push_back(target[k] + other[k]);
      }
    }
  if (rows.empty()) return zero_matrix(n, n);
  auto sol = solve(detail::rows_to_matrix(rows, n * n), rhs);
  if (!sol) return std::nullopt;
  return unflatten(*sol, n, n);
}

Subspace abg_space(const LieAlgebra& g, const Rational& alpha, const Rational& beta,
                   const Rational& gamma) {
  const std::size_t n = g.dim();
  Rows<Rational> rows;
  PairScope scope = beta == gamma ? PairScope::upper : PairScope::all_ordered;
  detail::append_bilinear_identity(rows, g, alpha, identity(n).scaled(beta),
                                   identity(n).scaled(gamma), scope);
  if (rows.empty()) return Subspace::full(n * n);
  return kernel_basis(detail::rows_to_matrix(rows, n * n));
}

DerivationSpace stabilized_space(const LieAlgebra& g, const Automorphism& sigma,
                                 const Subspace& h) {
  const std::size_t n = g.dim();
  if (h.ambient_dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "subspace does not live in the algebra");
  for (const auto& v : h.basis())
    if (!h.contains(sigma.matrix().apply(v)))
      throw Error(ErrorCode::NotSigmaStable, "sigma does not preserve the subspace");
  Rows<Rational> rows;
  const Automorphism id = Automorphism::identity(n);
  append_twisted(rows, g, sigma, id, PairScope::all_ordered);
  const Matrix eq = h.equations();
  for (std::size_t w = 0; w < eq.rows(); ++w)
    for (const auto& v : h.basis()) {
      std::vector<Rational> row(n * n);
      bool nonzero = false;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t c = 0; c < n; ++c) {
          Rational coef = eq(w, p) * v[c];
          if (coef.is_zero()) continue;
          row[p * n + c] = coef;
          nonzero = true;
        }
      if (nonzero) rows.push_back(std::move(row));
    }
  return solve_space(g, rows, sigma, id, DerivationKind::plain);
}

Matrix restrict_to(const Matrix& D, const Subspace& h) {
  if (D.rows() != h.ambient_dim() || D.cols() != h.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "map and subspace sizes differ");
  Matrix out(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto coords = h.coordinates(D.apply(h.basis()[i]));
    if (!coords) throw Error(ErrorCode::NotInSubspace, "map does not preserve the subspace");
    for (std::size_t r = 0; r < h.dim(); ++r) out(r, i) = (*coords)[r];
  }
  return out;
}

Matrix restricted_ad(const LieAlgebra& g, const Vector& x0, const Subspace& h) {
  return restrict_to(ad(g, x0), h);
}

Matrix tilde_map(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                 const Vector& x0, const Subspace& h) {
  require_dim(g, D, "map");
  Matrix A;
  try {
    A = restricted_ad(g, x0, h);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInSubspace) throw;
    throw Error(ErrorCode::AdNotInvertibleOnH, "ad(x0) does not preserve h");
  }
  if (rank(A) < h.dim())
    throw Error(ErrorCode::AdNotInvertibleOnH, "ad(x0) is not invertible on h");
  const Matrix Ainv = inverse(A);
  const std::size_t n = g.dim();
  const Vector sx0 = sigma.matrix().apply(x0);
  const Vector dx0 = D.apply(x0);
  Matrix out(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vector y(n);
    for (std::size_t j = 0; j < h.dim(); ++j)
      for (std::size_t c = 0; c < n; ++c) y[c] += Ainv(j, i) * h.basis()[j][c];
    Vector w = D.apply(bracket(g, x0, y));
    Vector a = bracket(g, D.apply(y), sx0);
    Vector b = bracket(g, sigma.matrix().apply(y), dx0);
    for (std::size_t c = 0; c < n; ++c) w[c] = w[c] * Rational(2) + a[c] + b[c];
    auto coords = h.coordinates(w);
    if (!coords) throw Error(ErrorCode::NotInSubspace, "tilde map leaves h");
    for (std::size_t r = 0; r < h.dim(); ++r) out(r, i) = (*coords)[r];
  }
  return out;
}

Matrix commutator_with_sigma(const Matrix& D, const Automorphism& sigma) {
  return D * sigma.matrix() - sigma.matrix() * D;
}

bool derived_in_kernel(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma) {
  const Matrix c = commutator_with_sigma(D, sigma);
  for (const auto& v : derived_subalgebra(g).basis())
    if (!is_zero_vector(c.apply(v))) return false;
  return true;
}

IntersectionReport intersection_report(const LieAlgebra& g, const Automorphism& sigma,
                                       const Automorphism& tau,
                                       const std::optional<Vector>& witness) {
  const Automorphism id = Automorphism::identity(g.dim());
  DerivationSpace ds = derivation_space(g, sigma, id);
  DerivationSpace dt = derivation_space(g, tau, id);
  Subspace both = intersect(ds.coordinates, dt.coordinates);
  IntersectionReport r;
  r.dim_sigma = ds.dimension();
  r.dim_tau = dt.dimension();
  r.dim_intersection = both.dim();
  r.intersection_basis = to_matrices(both, g.dim());
  if (witness) {
    if (witness->size() != g.dim())
      throw Error(ErrorCode::DimensionMismatch, "witness has the wrong length");
    r.witness = *witness;
    Vector u = sigma.inverse().apply(tau.matrix().apply(*witness));
    r.witness_in_centralizer = is_zero_vector(bracket(g, *witness, u));
  }
  return r;
}

PeriodicReport periodic_check(const LieAlgebra& g, const Matrix& D, const Automorphism& sigma,
                              std::size_t max_m) {
  require_dim(g, D, "map");
  if (is_abelian(g))
    throw Error(ErrorCode::AbelianAlgebra, "periodic check needs a nonabelian algebra");
  const std::size_t n = g.dim();
  PeriodicReport r;
  r.nonabelian = true;
  r.in_der_sigma = is_derivation_pair(g, D, sigma, Automorphism::identity(n));
  r.rational_eigenvalues = rational_roots(characteristic_polynomial(D));
  const Subspace fixed = kernel_basis(sigma.matrix() - identity(n));
  for (const auto& lambda : r.rational_eigenvalues) {
    Subspace eig = kernel_basis(D - identity(n).scaled(lambda));
    if (!intersect(eig, fixed).is_zero()) r.fixed_eigenvalues.push_back(lambda);
  }
  if (!r.in_der_sigma) {
    r.verdict = "hypothesis not met";
    return r;
  }
  if (rank(D) < n) {
    // A singular map has no finite order.
    r.verdict = "hypothesis not met";
    return r;
  }
  r.order = matrix_order(D, max_m);
  if (!r.order) {
    r.verdict = "order not found within bound";
    return r;
  }
  if (r.fixed_eigenvalues.empty()) {
    r.verdict = "hypothesis not met";
    return r;
  }
  r.verdict = *r.order % 6 == 0 ? "divisible-by-6 confirmed" : "divisible-by-6 violated";
  return r;
}

DirectSumReport direct_sum_closure(const LieAlgebra& g, const Automorphism& sigma) {
  const std::size_t n = g.dim();
  const Automorphism id = Automorphism::identity(n);
  DerivationSpace der = derivation_space(g, id, id);
  DerivationSpace ders = derivation_space(g, sigma, id);
  DirectSumReport r;
  r.involutive = sigma.matrix() * sigma.matrix() == identity(n);
  r.commutes_with_spaces = true;
  for (const auto* space : {&der, &ders})
    for (const auto& D : space->basis)
      if (!is_zero_matrix(commutator(D, sigma.matrix()))) r.commutes_with_spaces = false;
  Subspace total = sum(der.coordinates, ders.coordinates);
  std::vector<Matrix> all = der.basis;
  all.insert(all.end(), ders.basis.begin(), ders.basis.end());
  r.closed = true;
  for (std::size_t i = 0; i < all.size() && r.closed; ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!total.contains(flatten(commutator(all[i], all[j])))) {
        r.closed = false;
        break;
      }
  return r;
}

}  // namespace gderive
