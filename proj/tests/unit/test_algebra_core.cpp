#include <doctest.h>

#include "gderive/error.hpp"
#include "gderive/io.hpp"
#include "gderive/lie_algebra.hpp"

using namespace gderive;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("builtin algebras satisfy Jacobi") {
  for (const char* name : {"sl2", "heisenberg", "solvable_1_2", "abelian(4)"}) {
    LieAlgebra g = builtin(name);
    CHECK(validate_lie(g).empty());
    CHECK(g.validated().lie_validated());
  }
  CHECK(code_of([] { builtin("so3x"); }) == ErrorCode::UnknownName);
}

TEST_CASE("sl2 structure constants") {
  LieAlgebra g = builtin("sl2");
  CHECK(g.bracket_basis(0, 1) == Vector{-1, 0, 0});
  CHECK(g.bracket_basis(0, 2) == Vector{0, 2, 0});
  CHECK(g.bracket_basis(1, 2) == Vector{0, 0, -1});
  CHECK(g.bracket_basis(2, 0) == Vector{0, -2, 0});
  CHECK(is_perfect(g));
  CHECK(center(g).is_zero());
  CHECK(centralizer(g, unit_vector(3, 0)) == Subspace::span(3, {unit_vector(3, 0)}));
}

TEST_CASE("jacobi violations are reported") {
  LieAlgebra bad("bad", 3, {{0, 1, {0, 0, 1}}, {1, 2, {0, 1, 0}}});
  auto v = validate_lie(bad);
  REQUIRE(v.size() == 1);
  CHECK_FALSE(is_zero_vector(v[0].residual));
  CHECK(code_of([&] { bad.validated(); }) == ErrorCode::NotLieAlgebra);
}

TEST_CASE("heisenberg center and derived algebra") {
  LieAlgebra h = builtin("heisenberg");
  CHECK(center(h) == Subspace::span(3, {unit_vector(3, 2)}));
  CHECK(derived_subalgebra(h) == center(h));
  CHECK_FALSE(is_abelian(h));
  CHECK(is_abelian(builtin("abelian(2)")));
}

TEST_CASE("ad is column-as-image") {
  LieAlgebra g = builtin("sl2");
  Matrix a = ad(g, unit_vector(3, 0));
  for (std::size_t j = 0; j < 3; ++j) CHECK(a.column(j) == g.bracket_basis(0, j));
}

TEST_CASE("automorphisms are certified") {
  LieAlgebra g = builtin("sl2");
  CHECK(is_automorphism(g, diagonal({-1, 1, -1})));
  CHECK_FALSE(is_automorphism(g, diagonal({2, 1, 1})));
  CHECK(code_of([&] { Automorphism::make(g, diagonal({2, 1, 1})); }) == ErrorCode::UnvalidatedAutomorphism);
  CHECK(code_of([&] { Automorphism::make(g, identity(2)); }) == ErrorCode::DimensionMismatch);
  Automorphism s = Automorphism::make(g, diagonal({-1, 1, -1}));
  CHECK(s.matrix() * s.inverse() == identity(3));
  // Singular matrices are never automorphisms.
  CHECK_FALSE(is_automorphism(g, zero_matrix(3, 3)));
}

TEST_CASE("subalgebra structure constants") {
  LieAlgebra g = builtin("solvable_1_2");
  Subspace h = Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)});
  LieAlgebra sub = subalgebra(g, h);
  CHECK(sub.dim() == 2);
  CHECK(is_abelian(sub));
  Subspace not_closed = Subspace::span(3, {unit_vector(3, 0), Vector{0, 1, 1}});
  CHECK(code_of([&] { subalgebra(g, not_closed); }) == ErrorCode::NotInSubspace);
}

TEST_CASE("algebra json round trip") {
  for (const char* name : {"sl2", "heisenberg", "solvable_1_2"}) {
    LieAlgebra g = builtin(name);
    LieAlgebra back = algebra_from_json(to_json(g));
    CHECK(back.dim() == g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) CHECK(back.bracket_basis(i, j) == g.bracket_basis(i, j));
  }
  CHECK(code_of([] { algebra_from_json(Json::parse(R"({"name":"x","dim":2,"brackets":[{"left":2,"right":1,"result":[]}]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { algebra_from_json(Json::parse(R"({"name":"x","dim":2,"brackets":[{"left":1,"right":3,"result":[]}]})")); }) ==
        ErrorCode::ParseError);
}
