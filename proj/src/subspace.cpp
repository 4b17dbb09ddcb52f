#include "gderive/subspace.hpp"

namespace gderive {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Matrix m(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient)
      throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
  }
  RrefResult red = rref(m);
  for (std::size_t r = 0; r < red.rank; ++r) {
    auto row = red.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = red.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
  return span(ambient, vs);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_)
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
  Vector rest = v;
  Vector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = rest[pivots_[i]];
    coords[i] = f;
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!basis_[i][c].is_zero()) rest[c] -= f * basis_[i][c];
  }
  if (!is_zero_vector(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Matrix Subspace::equations() const {
  if (basis_.empty()) return identity(ambient_);
  Matrix b(basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) b(r, c) = basis_[r][c];
  Subspace ann = kernel_basis(b);
  Matrix eq(ann.dim(), ambient_);
  for (std::size_t r = 0; r < ann.dim(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) eq(r, c) = ann.basis()[r][c];
  return eq;
}

Subspace kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(cols, vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  Matrix ea = a.equations(), eb = b.equations();
  Matrix stacked(ea.rows() + eb.rows(), a.ambient_dim());
  for (std::size_t r = 0; r < ea.rows(); ++r)
    for (std::size_t c = 0; c < ea.cols(); ++c) stacked(r, c) = ea(r, c);
  for (std::size_t r = 0; r < eb.rows(); ++r)
    for (std::size_t c = 0; c < eb.cols(); ++c) stacked(ea.rows() + r, c) = eb(r, c);
  return kernel_basis(stacked);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  std::vector<Vector> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vs);
}

Matrix columns_matrix(const std::vector<Vector>& vectors, std::size_t rows) {
  Matrix m(rows, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = vectors[c][r];
  }
  return m;
}

}  // namespace gderive
