#include "gderive/lie_algebra.hpp"

#include <charconv>

namespace gderive {

LieAlgebra::LieAlgebra(std::string name, std::size_t dim,
                       const std::vector<BracketEntry>& brackets)
    : name_(std::move(name)), dim_(dim), tensor_(dim * dim * dim) {
  for (const auto& b : brackets) {
    if (b.left >= dim || b.right >= dim || b.result.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "bracket entry out of range");
    if (b.left >= b.right)
      throw Error(ErrorCode::DimensionMismatch, "bracket entries need left < right");
    for (std::size_t k = 0; k < dim; ++k) {
      tensor_[(b.left * dim + b.right) * dim + k] = b.result[k];
      tensor_[(b.right * dim + b.left) * dim + k] = -b.result[k];
    }
  }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
  return v;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vector v = bracket_basis(i, j);
      if (!is_zero_vector(v)) out.push_back({i, j, std::move(v)});
    }
  return out;
}

LieAlgebra LieAlgebra::validated() const {
  auto violations = validate_lie(*this);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::NotLieAlgebra,
                "Jacobi identity fails on (e" + std::to_string(v.i + 1) + ", e" +
                    std::to_string(v.j + 1) + ", e" + std::to_string(v.k + 1) + ")");
  }
  LieAlgebra copy = *this;
  copy.validated_ = true;
  return copy;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "bracket arguments have the wrong length");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!g.constant(i, j, k).is_zero()) out[k] += s * g.constant(i, j, k);
    }
  }
  return out;
}

std::vector<JacobiViolation> validate_lie(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<JacobiViolation> out;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = bracket(g, bracket(g, e(i), e(j)), e(k));
        Vector s = bracket(g, bracket(g, e(j), e(k)), e(i));
        Vector t = bracket(g, bracket(g, e(k), e(i)), e(j));
        for (std::size_t m = 0; m < n; ++m) r[m] += s[m] + t[m];
        if (!is_zero_vector(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

Matrix ad(const LieAlgebra& g, const Vector& x) {
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(g, x, unit_vector(n, j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

Subspace centralizer(const LieAlgebra& g, const Vector& x) { return kernel_basis(ad(g, x)); }

Subspace center(const LieAlgebra& g) {
  // x is central iff [x, e_j] = 0 for every j: stack the maps x -> [x, e_j].
  const std::size_t n = g.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) stacked(j * n + k, i) = g.constant(i, j, k);
  return kernel_basis(stacked);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) vs.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.dim(), vs);
}

bool is_perfect(const LieAlgebra& g) { return derived_subalgebra(g).dim() == g.dim(); }

bool is_abelian(const LieAlgebra& g) { return derived_subalgebra(g).is_zero(); }

bool is_automorphism(const LieAlgebra& g, const Matrix& m) {
  const std::size_t n = g.dim();
  if (m.rows() != n || m.cols() != n) return false;
  if (rank(m) < n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = m.apply(g.bracket_basis(i, j));
      Vector rhs = bracket(g, m.column(i), m.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& h) {
  if (h.ambient_dim() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "subspace does not live in the algebra");
  std::vector<BracketEntry> entries;
  const auto& b = h.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      auto coords = h.coordinates(bracket(g, b[i], b[j]));
      if (!coords) throw Error(ErrorCode::NotInSubspace, "subspace is not closed under the bracket");
      if (!is_zero_vector(*coords)) entries.push_back({i, j, *coords});
    }
  return LieAlgebra(g.name() + "|h", b.size(), entries);
}

namespace {

Vector coeffs(std::size_t n, std::initializer_list<std::pair<long, std::size_t>> terms) {
  Vector v(n);
  for (auto [c, k] : terms) v[k] = c;
  return v;
}

}  // namespace

LieAlgebra builtin(std::string_view name) {
  if (name == "sl2") {
    return LieAlgebra("sl2", 3,
                      {{0, 1, coeffs(3, {{-1, 0}})},
                       {0, 2, coeffs(3, {{2, 1}})},
                       {1, 2, coeffs(3, {{-1, 2}})}})
        .validated();
  }
  if (name == "heisenberg")
    return LieAlgebra("heisenberg", 3, {{0, 1, coeffs(3, {{1, 2}})}}).validated();
  if (name == "solvable_1_2") {
    return LieAlgebra("solvable_1_2", 3,
                      {{0, 1, coeffs(3, {{1, 1}})}, {0, 2, coeffs(3, {{2, 2}})}})
        .validated();
  }
  constexpr std::string_view prefix = "abelian(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n > 0)
      return LieAlgebra(std::string(name), n, {}).validated();
  }
  throw Error(ErrorCode::UnknownName, "unknown builtin algebra '" + std::string(name) + "'");
}

Automorphism Automorphism::make(const LieAlgebra& g, const Matrix& m) {
  if (m.rows() != g.dim() || m.cols() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "automorphism has the wrong size");
  if (!is_automorphism(g, m))
    throw Error(ErrorCode::UnvalidatedAutomorphism,
                "matrix is not an automorphism of " + g.name());
  return Automorphism(m, gderive::inverse(m));
}

Automorphism Automorphism::identity(std::size_t n) {
  return Automorphism(gderive::identity(n), gderive::identity(n));
}

}  // namespace gderive
