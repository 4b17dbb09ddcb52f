#include <doctest.h>

#include <random>

#include "gderive/ideal.hpp"
#include "gderive/io.hpp"
#include "gderive/reproduce.hpp"

using namespace gderive;

namespace {

std::vector<MultiPoly> monic_all(const Ideal& ideal) {
  std::vector<MultiPoly> out;
  for (const auto& g : ideal.generators()) out.push_back(g.monic());
  std::sort(out.begin(), out.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return a.leading_exponents() > b.leading_exponents(); });
  return out;
}

MultiPoly random_poly(std::mt19937_64& rng, const RingPtr& ring) {
  std::uniform_int_distribution<int> nt(0, 4), ex(0, 2), co(-5, 5);
  MultiPoly p(ring);
  for (int t = nt(rng); t > 0; --t) {
    Exponents e(ring->size());
    for (auto& x : e) x = static_cast<unsigned>(ex(rng));
    p += MultiPoly::monomial(ring, e, Rational(co(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial parse and print") {
  RingPtr r = make_ring({"x", "y", "z"});
  CHECK(parse_poly(r, "y + x^2 - 3*x*y").str() == "x^2 - 3*x*y + y");
  CHECK(parse_poly(r, "(x - y)^2").str() == "x^2 - 2*x*y + y^2");
  CHECK(parse_poly(r, "x/2 - z*(y + 1)").str() == "1/2*x - y*z - z");
  CHECK(parse_poly(r, "0").is_zero());
  CHECK(parse_poly(r, "-x").str() == "-x");
  CHECK(parse_poly(r, "x - x").str() == "0");
  for (const char* bad : {"x +", "x/y", "2^x", "x^-1", "(x", "x y", ""}) CHECK_THROWS_AS(parse_poly(r, bad), Error);
  try {
    parse_poly(r, "w + 1");
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
  }
}

TEST_CASE("printing round-trips") {
  RingPtr r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    MultiPoly p = random_poly(rng, r);
    CHECK(parse_poly(r, p.str()) == p);
  }
}

TEST_CASE("ring laws on random polynomials") {
  RingPtr r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    MultiPoly a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    MultiPoly s = a;
    s += s;
    CHECK(s == a * Rational(2));
    std::vector<Rational> pt = {Rational(2), Rational(-1, 3), Rational(5)};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST_CASE("lex order keeps terms sorted") {
  RingPtr r = make_ring({"x", "y"});
  MultiPoly p = parse_poly(r, "y^5 + x*y + x^2 + 1");
  CHECK(p.leading_exponents() == Exponents{2, 0});
  CHECK(p.str() == "x^2 + x*y + y^5 + 1");
}

TEST_CASE("substitution and ring maps") {
  RingPtr r = make_ring({"x", "y", "t"});
  MultiPoly p = parse_poly(r, "x*t + y*t^2 - 1");
  MultiPoly q = substitute(p, {{"t", Rational(2)}});
  CHECK(q.ring()->names() == std::vector<std::string>{"x", "y"});
  CHECK(q.str() == "2*x + 4*y - 1");
  RingPtr swapped = make_ring({"t", "y", "x"});
  CHECK(map_to_ring(map_to_ring(p, swapped), r) == p);
  MultiPoly c = compose(p, r, {parse_poly(r, "x - t"), parse_poly(r, "y"), parse_poly(r, "t")});
  CHECK(c == parse_poly(r, "x*t - t^2 + y*t^2 - 1"));
}

TEST_CASE("division certificates") {
  RingPtr r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    std::vector<MultiPoly> divs = {random_poly(rng, r), random_poly(rng, r)};
    MultiPoly p = random_poly(rng, r) * random_poly(rng, r);
    auto d = divide(p, divs);
    MultiPoly sum = d.remainder;
    for (std::size_t i = 0; i < divs.size(); ++i) sum += d.quotients[i] * divs[i];
    CHECK(sum == p);
    for (const auto& term : d.remainder.terms())
      for (const auto& g : divs)
        if (!g.is_zero()) CHECK_FALSE(divides(g.leading_exponents(), term.exp));
  }
}

TEST_CASE("reduced lex bases match frozen references") {
  struct Case {
    std::vector<std::string> vars, gens, basis;
  };
  const std::vector<Case> cases = {
      {{"x", "y"}, {"x^2 - y", "x^3 - x"}, {"x^2 - y", "x*y - x", "y^2 - y"}},
      {{"x", "y", "z"}, {"x*y - z", "y*z - x", "z*x - y"}, {"x - y*z", "y^2 - z^2", "y*z^2 - y", "z^3 - z"}},
      {{"x", "y", "z"},
       {"x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"},
       {"x + y + z^2 - 1", "y^2 - y - z^2 + z", "2*y*z^2 + z^4 - z^2", "z^6 - 4*z^4 + 4*z^3 - z^2"}},
      {{"x", "y"}, {"x^2*y - 1", "x*y^2 - x"}, {"x^2 - y", "y^2 - 1"}},
  };
  for (const auto& c : cases) {
    RingPtr r = make_ring(c.vars);
    Ideal gb = buchberger(Ideal::parse(r, c.gens));
    CHECK(*gb.reduced_basis() == monic_all(Ideal::parse(r, c.basis)));
  }
}

TEST_CASE("unit ideal and guard") {
  RingPtr r = make_ring({"x", "y"});
  Ideal unit = buchberger(Ideal::parse(r, {"x*y - 1", "x"}));
  REQUIRE(unit.reduced_basis()->size() == 1);
  CHECK(unit.reduced_basis()->front().is_constant());
  RingPtr r3 = make_ring({"x", "y", "z"});
  try {
    buchberger(Ideal::parse(r3, {"x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"}), GroebnerOptions{1});
    FAIL("expected DegreeGuardExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeGuardExceeded);
  }
}

TEST_CASE("random ideals give reduced Groebner bases") {
  for (const auto& ideal : random_ideals(20, 11)) {
    Ideal gb = buchberger(ideal);
    const auto& G = *gb.reduced_basis();
    for (std::size_t i = 0; i < G.size(); ++i) {
      CHECK(G[i].leading_coefficient().is_one());
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i == j) continue;
        CHECK(normal_form(s_polynomial(G[i], G[j]), G).is_zero());
        for (const auto& t : G[j].terms()) CHECK_FALSE(divides(G[i].leading_exponents(), t.exp));
      }
    }
    for (const auto& g : ideal.generators()) CHECK(member(g, gb));
    // Same ideal, same reduced basis.
    std::vector<MultiPoly> rev(ideal.generators().rbegin(), ideal.generators().rend());
    CHECK(*buchberger(Ideal(ideal.ring(), rev)).reduced_basis() == G);
  }
}

TEST_CASE("containment and products") {
  RingPtr r = make_ring({"x", "y"});
  Ideal a = Ideal::parse(r, {"x"}), b = Ideal::parse(r, {"y"}), ab = ideal_product(a, b);
  CHECK(contains(a, ab));
  CHECK(contains(b, ab));
  CHECK_FALSE(contains(ab, a));
  CHECK(member(parse_poly(r, "x*y^3 - x^2*y"), ab));
  CHECK_FALSE(member(parse_poly(r, "x + y"), ab));
  CHECK_THROWS_AS(contains(a, Ideal::parse(make_ring({"u"}), {"u"})), Error);
}

TEST_CASE("triangular primality certificate") {
  RingPtr r = make_ring({"x", "y", "z"});
  auto ok = triangular_prime_check(Ideal::parse(r, {"x - y^2", "z - y"}));
  CHECK(ok.certified);
  CHECK(ok.free_vars == std::vector<std::string>{"z"});
  CHECK_FALSE(triangular_prime_check(Ideal::parse(r, {"x^2", "y"})).certified);
  CHECK_FALSE(triangular_prime_check(Ideal::parse(r, {"x*y"})).certified);
  CHECK_FALSE(triangular_prime_check(Ideal::parse(r, {"x", "x - 1"})).certified);
}

TEST_CASE("ideal json") {
  Ideal i = ideal_from_json(Json::parse(R"({"vars": ["a", "b"], "gens": ["a*b - 1", "a^2"]})"));
  CHECK(i.generators().size() == 2);
  Json j = to_json(buchberger(i));
  CHECK(j["gens"] == Json::array({"1"}));
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"vars": ["a"], "gens": ["b"]})")), Error);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"vars": ["a", "a"], "gens": []})")), Error);
}
