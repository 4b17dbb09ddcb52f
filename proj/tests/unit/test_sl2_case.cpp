#include <doctest.h>

#include "gderive/derivations.hpp"
#include "gderive/sl2.hpp"
#include "oracles.hpp"

using namespace gderive;
using sl2::Family;

namespace {

const LieAlgebra& sl2g() {
  static const LieAlgebra g = builtin("sl2");
  return g;
}

std::vector<MultiPoly> parsed(const RingPtr& r, const std::vector<std::string>& s) {
  std::vector<MultiPoly> out;
  for (const auto& x : s) out.push_back(parse_poly(r, x).monic());
  return out;
}

bool same_ideal(const Ideal& a, const Ideal& b) { return contains(a, b) && contains(b, a); }

}  // namespace

TEST_CASE("general derivation and nilpotency dichotomy") {
  CHECK(is_derivation_pair(sl2g(), sl2::derivation_form(2, -3, Rational(1, 2)), Automorphism::identity(3),
                           Automorphism::identity(3)));
  auto nil = sl2::classify_derivation(2, 1, 1);  // a^2 = 4bc
  CHECK(nil.nilpotent);
  CHECK(nil.agrees);
  auto zero_a = sl2::classify_derivation(0, 0, 5);
  CHECK(zero_a.nilpotent);
  auto semi = sl2::classify_derivation(1, 1, 1);
  CHECK_FALSE(semi.nilpotent);
  CHECK(semi.ranks == std::array<std::size_t, 3>{2, 2, 2});
  CHECK(semi.agrees);
  CHECK_FALSE(sl2::classify_derivation(1, 0, 3).nilpotent);
}

TEST_CASE("one-parameter automorphisms") {
  for (Rational v : {Rational(1), Rational(-2), Rational(3, 5)}) {
    Matrix eb = exp_nilpotent(sl2::D_b(v));
    CHECK(eb == Matrix::from_rows({{1, v, -(v * v)}, {0, 1, Rational(-2) * v}, {0, 0, 1}}));
    Matrix ec = exp_nilpotent(sl2::D_c(v));
    CHECK(ec == Matrix::from_rows({{1, 0, 0}, {Rational(-2) * v, 1, 0}, {-(v * v), v, 1}}));
    CHECK(is_automorphism(sl2g(), eb));
    CHECK(is_automorphism(sl2g(), ec));
  }
  Matrix dab = sl2::D_ab(2, 1);
  CHECK(is_nilpotent(dab));
  CHECK(is_automorphism(sl2g(), exp_nilpotent(dab)));
  CHECK(sl2::family_sigma(Family::AB, {{"a", 1}, {"b", 3}}) == exp_nilpotent(sl2::D_ab(1, 3)));
  try {
    sl2::D_ab(0, 1);
    FAIL("expected ZeroParameterA");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroParameterA);
  }
  try {
    sl2::coordinate_values(Family::AB, {{"a", 1}, {"b", 0}});
    FAIL("expected ZeroParameterB");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroParameterB);
  }
  CHECK_THROWS_AS(sl2::family_sigma(Family::B, {{"c", 1}}), Error);
}

TEST_CASE("symbolic sigma evaluates to the fixed exponentials") {
  for (auto f : {Family::B, Family::C, Family::AB}) {
    auto sf = sl2::symbolic_family(f);
    Params p = f == Family::AB ? Params{{"a", 2}, {"b", Rational(-1, 3)}}
                               : Params{{f == Family::B ? "b" : "c", Rational(3, 5)}};
    CHECK(evaluate(sf.sigma, sl2::coordinate_values(f, p)) == sl2::family_sigma(f, p));
  }
}

TEST_CASE("family-b equations match the hand-typed system") {
  auto di = sl2::derivation_ideal(Family::B);
  auto off = di.off_diagonal();
  CHECK(off.size() == 15);
  CHECK(di.raw.size() == 20);
  Ideal typed = Ideal::parse(di.ring, oracle::sl2_b_equations());
  CHECK(same_ideal(typed, Ideal(di.ring, off)));
  // Sixteen displayed equations, fifteen distinct up to scaling.
  std::vector<MultiPoly> distinct;
  for (const auto& g : typed.generators()) {
    MultiPoly m = g.monic();
    if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
  }
  CHECK(distinct.size() == 15);
  // Diagonal pairs add nothing to the ideal.
  CHECK(same_ideal(di.ideal, typed));
}

TEST_CASE("reduced bases of J") {
  auto b = sl2::derivation_ideal(Family::B);
  CHECK(*b.simplified.reduced_basis() ==
        parsed(b.ring, {"x11 + x33", "x12 + 2*x23", "x13", "x21 + 1/2*x32", "x22", "x23*y", "x31 - 1/2*x32*y", "x33*y"}));
  auto c = sl2::derivation_ideal(Family::C);
  CHECK(*c.simplified.reduced_basis() ==
        parsed(c.ring, {"x11 + x33", "x12 + 2*x23", "x13 + x23*y", "x21 + 1/2*x32", "x22", "x31", "x32*y", "x33*y"}));
  CHECK(member(parse_poly(b.ring, "x22"), b.simplified));
  // The stated generating set x13, f1..f6 omits x22.
  Ideal stated = Ideal::parse(b.ring, {"x13", "x11 + x33", "x12 + 2*x23", "x21 + 1/2*x32", "x23*y", "x31 - 1/2*x32*y", "x33*y"});
  CHECK_FALSE(member(parse_poly(b.ring, "x22"), stated));
  CHECK(contains(b.simplified, stated));
}

TEST_CASE("family-b components") {
  auto kc = sl2::known_components(Family::B);
  auto di = sl2::derivation_ideal(Family::B);
  Ideal p1_rebuilt(di.ring, [&] {
    auto g = di.simplified.generators();
    g.push_back(parse_poly(di.ring, "y"));
    return g;
  }());
  CHECK(same_ideal(kc.p1.ideal, p1_rebuilt));
  auto c1 = triangular_prime_check(kc.p1.ideal);
  auto c2 = triangular_prime_check(kc.p2.ideal);
  CHECK(c1.certified);
  CHECK(c2.certified);
  CHECK(c1.free_vars == std::vector<std::string>{"x23", "x32", "x33"});
  CHECK(c2.free_vars == std::vector<std::string>{"x32", "y"});
}

TEST_CASE("decomposition verdicts") {
  for (auto f : {Family::B, Family::C, Family::AB}) {
    auto r = sl2::verify_decomposition(f);
    CHECK(r.all_verdicts);
    CHECK(r.product_in_J);
    REQUIRE(r.components.size() == 2);
    std::size_t d1 = f == Family::AB ? 4 : 3, d2 = f == Family::AB ? 3 : 2;
    CHECK(r.components[0].dimension == d1);
    CHECK(r.components[1].dimension == d2);
  }
  CHECK_FALSE(sl2::verify_decomposition(Family::AB).x22_in_J);
}

TEST_CASE("parametric forms are sigma-derivations at sampled parameters") {
  auto kc = sl2::known_components(Family::C);
  for (Rational c : {Rational(1), Rational(-2), Rational(3, 5)}) {
    Matrix D = evaluate(kc.p2.form.D, {{"a", 2}, {"c", c}});
    Automorphism s = Automorphism::make(sl2g(), sl2::family_sigma(Family::C, {{"c", c}}));
    CHECK(is_derivation_pair(sl2g(), D, s, Automorphism::identity(3)));
    CHECK_FALSE(is_derivation_pair(sl2g(), sl2::printed_form_c(2, c), s, Automorphism::identity(3)));
  }
  auto kab = sl2::known_components(Family::AB);
  Params t = sl2::coordinate_values(Family::AB, {{"a", 2}, {"b", 1}});
  Matrix D = evaluate(kab.p2.form.D, {{"k", 1}, {"t", t["t"]}, {"y", t["y"]}});
  Automorphism s = Automorphism::make(sl2g(), sl2::family_sigma(Family::AB, {{"a", 2}, {"b", 1}}));
  CHECK(is_derivation_pair(sl2g(), D, s, Automorphism::identity(3)));
  CHECK(D == Matrix::from_rows({{3, 2, -1}, {-4, -2, 0}, {-1, 0, -1}}));
}

TEST_CASE("fixed-parameter dimensions from two pipelines") {
  struct Case {
    Family f;
    Params p;
    std::size_t dim;
  };
  const std::vector<Case> cases = {
      {Family::B, {{"b", 0}}, 3},         {Family::B, {{"b", 1}}, 1},
      {Family::B, {{"b", -2}}, 1},        {Family::C, {{"c", 1}}, 1},
      {Family::C, {{"c", -2}}, 1},        {Family::C, {{"c", Rational(3, 5)}}, 1},
      {Family::AB, {{"a", 2}, {"b", 1}}, 1}, {Family::AB, {{"a", 1}, {"b", 3}}, 1},
      {Family::AB, {{"a", 1}, {"b", 1}}, 1},
  };
  for (const auto& c : cases) {
    auto r = sl2::fixed_param_dimension(c.f, c.p);
    CHECK(r.dimension == c.dim);
    CHECK(r.pipelines_agree);
    CHECK(r.gderiv_dimension == c.dim);
    CHECK(r.claimed_dimension == 4);
    CHECK(r.discrepancy);
    CHECK(oracle::derivation_dim(sl2g(), r.sigma, identity(3)) == c.dim);
  }
  for (Rational b : {Rational(0), Rational(1), Rational(-2)})
    CHECK(9 - oracle::bareiss_rank(oracle::sl2_b_rows(b)) ==
          sl2::fixed_param_dimension(Family::B, {{"b", b}}).dimension);
}
