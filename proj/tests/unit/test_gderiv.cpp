#include <doctest.h>

#include "gderive/derivations.hpp"
#include "gderive/reproduce.hpp"
#include "gderive/sl2.hpp"
#include "oracles.hpp"

using namespace gderive;

namespace {

const LieAlgebra& sl2g() {
  static const LieAlgebra g = builtin("sl2");
  return g;
}

Automorphism aut(const LieAlgebra& g, const Matrix& m) { return Automorphism::make(g, m); }
Automorphism id3() { return Automorphism::identity(3); }

Matrix exp_b(long n, long d = 1) { return exp_nilpotent(sl2::D_b(Rational(n, d))); }

}  // namespace

TEST_CASE("Der(sl2) has dimension 3") {
  DerivationSpace d = derivation_space(sl2g(), id3(), id3());
  CHECK(d.dimension() == 3);
  CHECK(oracle::derivation_dim(sl2g(), identity(3), identity(3)) == 3);
  for (const auto& D : d.basis) CHECK(is_derivation_pair(sl2g(), D, id3(), id3()));
}

TEST_CASE("derivation spaces agree with the elementary-matrix oracle") {
  const LieAlgebra h = builtin("heisenberg"), s = builtin("solvable_1_2");
  std::vector<std::tuple<const LieAlgebra*, Matrix, Matrix>> cases;
  for (const auto& m : sl2_family_samples()) {
    cases.emplace_back(&sl2g(), m, identity(3));
    cases.emplace_back(&sl2g(), m, m);
    cases.emplace_back(&sl2g(), identity(3), m);
  }
  cases.emplace_back(&h, heisenberg_sigma(), identity(3));
  cases.emplace_back(&h, diagonal({2, 3, 6}), diagonal({1, -1, -1}));
  cases.emplace_back(&s, solvable_sigma(), identity(3));
  for (const auto& [g, sm, tm] : cases) {
    DerivationSpace d = derivation_space(*g, aut(*g, sm), aut(*g, tm));
    CHECK(d.dimension() == oracle::derivation_dim(*g, sm, tm));
    for (const auto& D : d.basis) CHECK(is_derivation_pair(*g, D, aut(*g, sm), aut(*g, tm)));
  }
}

TEST_CASE("off-diagonal pairs lose the diagonal constraints") {
  const LieAlgebra h = builtin("heisenberg");
  Automorphism s = aut(h, heisenberg_sigma());
  DerivationSpace all = derivation_space(h, s, Automorphism::identity(3));
  DerivationSpace off = derivation_space(h, s, Automorphism::identity(3), PairScope::off_diagonal);
  CHECK(all.dimension() == 4);
  CHECK(off.dimension() == 5);
  CHECK(off.coordinates.contains(all.coordinates));
  // diag(-1,1,0) satisfies the off-diagonal equations only.
  Matrix bad = diagonal({-1, 1, 0});
  CHECK(off.contains(bad));
  CHECK_FALSE(is_derivation_pair(h, bad, s, Automorphism::identity(3)));
  CHECK(centroid(h).dimension() == 3);
  CHECK(centroid(h, PairScope::off_diagonal).dimension() == 5);
}

TEST_CASE("fixed sigma-derivation of sl2") {
  DerivationSpace d = derivation_space(sl2g(), aut(sl2g(), exp_b(1)), id3());
  REQUIRE(d.dimension() == 1);
  CHECK(d.basis[0] == Matrix::from_rows({{0, 1, -1}, {0, 0, -2}, {0, 0, 0}}));
}

TEST_CASE("twisting identifies Der_{sigma,tau} with Der_{tau^-1 sigma}") {
  auto pool = sl2_family_samples();
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); j += 3) {
      Automorphism s = aut(sl2g(), pool[i]), t = aut(sl2g(), pool[j]);
      DerivationSpace a = derivation_space(sl2g(), s, t);
      DerivationSpace b = derivation_space(sl2g(), aut(sl2g(), t.inverse() * s.matrix()), id3());
      CHECK(a.dimension() == b.dimension());
      for (const auto& D : a.basis) CHECK(b.contains(twist(D, t)));
    }
}

TEST_CASE("central perturbations of sigma do not change Der_sigma") {
  const LieAlgebra h = builtin("heisenberg");
  Matrix s = heisenberg_sigma();
  Matrix t = s;
  t(2, 0) += 1;  // sigma - tau maps into the center
  t(2, 1) += Rational(1, 2);
  REQUIRE(is_automorphism(h, t));
  CHECK(derivation_space(h, aut(h, s), Automorphism::identity(3)).coordinates ==
        derivation_space(h, aut(h, t), Automorphism::identity(3)).coordinates);
}

TEST_CASE("sigma-bracket transports to the commutator") {
  Automorphism s = aut(sl2g(), exp_b(1));
  DerivationSpace d = derivation_space(sl2g(), s, s);
  DerivationSpace der = derivation_space(sl2g(), id3(), id3());
  for (const auto& D : d.basis)
    for (const auto& T : d.basis) {
      Matrix br = sigma_bracket(D, T, s);
      CHECK(d.contains(br));
      CHECK(s.inverse() * br == commutator(s.inverse() * D, s.inverse() * T));
      CHECK(der.contains(s.inverse() * D));
    }
}

TEST_CASE("commutator with ad_x") {
  // [D, ad_x] = sigma ad_{sigma^-1 D x}
  const LieAlgebra h = builtin("heisenberg");
  std::vector<std::pair<const LieAlgebra*, Matrix>> cases = {{&sl2g(), exp_b(1)}, {&sl2g(), exp_b(-2)},
                                                             {&h, heisenberg_sigma()}};
  for (const auto& [g, sm] : cases) {
    Automorphism s = aut(*g, sm);
    for (const auto& D : derivation_space(*g, s, Automorphism::identity(3)).basis)
      for (std::size_t i = 0; i < 3; ++i) {
        Vector x = unit_vector(3, i);
        CHECK(commutator(D, ad(*g, x)) == s.matrix() * ad(*g, s.inverse().apply(D.apply(x))));
        CHECK(phi_x_sigma(*g, D, s, x) == ad(*g, s.inverse().apply(D.apply(x))));
      }
  }
}

TEST_CASE("left-symmetric product from an invertible derivation") {
  const LieAlgebra h = builtin("heisenberg");
  Matrix D = diagonal({1, 1, 2});
  REQUIRE(is_derivation_pair(h, D, Automorphism::identity(3), Automorphism::identity(3)));
  ProductTable t = left_symmetric_product(h, D, Automorphism::identity(3));
  CHECK(is_left_symmetric(t));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vector c = t.at(i, j);
      Vector d = t.at(j, i);
      for (std::size_t k = 0; k < 3; ++k) c[k] -= d[k];
      CHECK(c == h.bracket_basis(i, j));
    }
  // The two-dimensional nonabelian algebra has no invertible derivation.
  LieAlgebra r2("r2", 2, {{0, 1, {0, 1}}});
  DerivationSpace der = derivation_space(r2, Automorphism::identity(2), Automorphism::identity(2));
  for (const auto& b : der.basis) CHECK(determinant(b).is_zero());
  CHECK(der.dimension() == 2);
  CHECK_THROWS_AS(left_symmetric_product(r2, der.basis[0], Automorphism::identity(2)), Error);
}

TEST_CASE("centroid of sl2 is the scalars and meets Der_sigma trivially") {
  DerivationSpace c = centroid(sl2g());
  CHECK(c.dimension() == 1);
  CHECK(c.contains(identity(3)));
  for (const auto& m : sl2_family_samples())
    CHECK(intersect(c.coordinates, derivation_space(sl2g(), aut(sl2g(), m), id3()).coordinates).is_zero());
  CHECK(is_centroid_element(sl2g(), identity(3).scaled(Rational(5))));
}

TEST_CASE("quasiderivation witnesses") {
  const LieAlgebra h = builtin("heisenberg");
  for (const auto& D : derivation_space(h, Automorphism::identity(3), Automorphism::identity(3)).basis) {
    auto T = quasiderivation_witness(h, D);
    REQUIRE(T);
    CHECK(T->column(2) == D.column(2));
  }
  for (const auto& C : centroid(h).basis) CHECK(quasiderivation_witness(h, C).has_value());
  // The three sl2 brackets hit independent vectors, so every map has a unique T.
  CHECK(quasiderivation_witness(sl2g(), diagonal({1, 0, 0})) == diagonal({1, 1, 0}));
  // D(e3) = e2 breaks [e1, e3] = 0 on heisenberg.
  Matrix bad = zero_matrix(3, 3);
  bad(1, 2) = 1;
  CHECK_FALSE(quasiderivation_witness(h, bad).has_value());
}

TEST_CASE("(alpha, beta, gamma)-derivations") {
  const LieAlgebra h = builtin("heisenberg");
  CHECK(abg_space(sl2g(), 1, 1, 1) == derivation_space(sl2g(), id3(), id3()).coordinates);
  CHECK(abg_space(sl2g(), 0, 0, 0).dim() == 9);
  // sigma - a I maps into the center: Der_sigma = D(1, a, 1).
  for (Rational a : {Rational(2), Rational(-1), Rational(3, 5)}) {
    Matrix s = diagonal({a, a, a * a});
    REQUIRE(is_automorphism(h, s));
    CHECK(derivation_space(h, aut(h, s), Automorphism::identity(3)).coordinates == abg_space(h, 1, a, 1));
  }
}

TEST_CASE("stabilized derivations and restriction") {
  const LieAlgebra g = builtin("solvable_1_2");
  Automorphism s = aut(g, solvable_sigma());
  Subspace h = Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)});
  DerivationSpace st = stabilized_space(g, s, h);
  CHECK(st.dimension() == 4);
  CHECK(restricted_ad(g, unit_vector(3, 0), h) == diagonal({1, 2}));
  for (const auto& D : st.basis) {
    Matrix r = restrict_to(D, h);
    CHECK(r(0, 1).is_zero());
    CHECK(r(1, 0).is_zero());
    Matrix tl = tilde_map(g, D, s, unit_vector(3, 0), h);
    CHECK(tl.rows() == 2);
  }
  Subspace not_stable = Subspace::span(3, {unit_vector(3, 0)});
  try {
    stabilized_space(g, s, not_stable);
    FAIL("expected NotSigmaStable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSigmaStable);
  }
  try {
    tilde_map(g, st.basis[0], s, unit_vector(3, 1), h);
    FAIL("expected AdNotInvertibleOnH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AdNotInvertibleOnH);
  }
}

TEST_CASE("interiors for cyclic groups") {
  Automorphism s = aut(sl2g(), exp_b(1));
  DerivationSpace plus = plus_interior(sl2g(), s);
  DerivationSpace minus = minus_interior(sl2g(), s, {s});
  CHECK(plus.coordinates == minus.coordinates);
  CHECK(derivation_space(sl2g(), s, id3()).coordinates.contains(plus.coordinates));
  // At the identity grade the plus interior is all of Der, the minus interior is not.
  CHECK(plus_interior(sl2g(), id3()).dimension() == 3);
  CHECK(minus_interior(sl2g(), id3(), {s}).dimension() == 1);
  // Minus interiors multiply into the product grade.
  Automorphism s2 = aut(sl2g(), s.matrix() * s.matrix());
  DerivationSpace m0 = minus_interior(sl2g(), id3(), {s});
  DerivationSpace m2 = minus_interior(sl2g(), s2, {s});
  for (const auto& D : m0.basis)
    for (const auto& T : minus.basis) CHECK(minus.contains(commutator(D, T)));
  for (const auto& D : minus.basis)
    for (const auto& T : minus.basis) CHECK(m2.contains(commutator(D, T)));
}

TEST_CASE("intersection counterexample") {
  auto r = intersection_report(sl2g(), id3(), aut(sl2g(), exp_b(1)), unit_vector(3, 0));
  CHECK(r.dim_sigma == 3);
  CHECK(r.dim_tau == 1);
  CHECK(r.dim_intersection == 0);
  CHECK(r.witness_in_centralizer == true);
}

TEST_CASE("periodic check verdicts") {
  CHECK_THROWS_AS(periodic_check(builtin("abelian(3)"), identity(3), Automorphism::identity(3), 36), Error);
  auto nil = periodic_check(sl2g(), sl2::D_b(1), aut(sl2g(), exp_b(1)), 36);
  CHECK(nil.verdict == "hypothesis not met");
  CHECK_FALSE(nil.order.has_value());
  for (const auto& m : sl2_family_samples()) {
    Automorphism s = aut(sl2g(), m);
    for (const auto& D : derivation_space(sl2g(), s, id3()).basis) {
      auto r = periodic_check(sl2g(), D, s, 36);
      CHECK(r.in_der_sigma);
      CHECK(r.verdict != "violated");
    }
  }
}

TEST_CASE("direct sum closure for an involution") {
  auto r = direct_sum_closure(sl2g(), aut(sl2g(), diagonal({-1, 1, -1})));
  CHECK(r.involutive);
}
