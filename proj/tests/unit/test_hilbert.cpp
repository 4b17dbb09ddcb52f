#include <doctest.h>

#include "gderive/derivations.hpp"
#include "gderive/hilbert.hpp"
#include "gderive/sl2.hpp"

using namespace gderive;

namespace {

const LieAlgebra& sl2g() {
  static const LieAlgebra g = builtin("sl2");
  return g;
}

std::map<long, std::size_t> window(std::size_t K, auto f) {
  std::map<long, std::size_t> d;
  for (long k = -static_cast<long>(K); k <= static_cast<long>(K); ++k) d[k] = f(k);
  return d;
}

}  // namespace

TEST_CASE("identity grading is a single finite cycle") {
  GradedDims gd = graded_dims(sl2g(), Automorphism::identity(3), GradeKind::plain);
  CHECK(gd.finite_order == 1u);
  CHECK(gd.dims == std::map<long, std::size_t>{{0, 3}});
  CHECK(rational_series(gd).str() == "3");
  CHECK_THROWS_AS(detect_period(gd), Error);
}

TEST_CASE("exp(D_1) window") {
  Automorphism s = Automorphism::make(sl2g(), exp_nilpotent(sl2::D_b(1)));
  GradedDims gd = graded_dims(sl2g(), s, GradeKind::plain, 6);
  CHECK_FALSE(gd.finite_order.has_value());
  CHECK(gd.dims == window(6, [](long k) { return k == 0 ? 3u : 1u; }));
  CHECK(detect_period(gd) == Period{1, 1});
  RationalSeries rs = rational_series(gd);
  CHECK(rs.str() == "3 + t/(1 - t) + t^-1/(1 - t^-1)");
  CHECK(rs.certification == "window-certified to K = 6");
  CHECK(rs.expand(-6, 6) == gd.dims);
  GradedDims plus = graded_dims(sl2g(), s, GradeKind::plus, 6);
  for (const auto& [k, d] : plus.dims) CHECK(d <= gd.dims.at(k));
}

TEST_CASE("order-two automorphism gives a polynomial") {
  GradedDims gd = graded_dims(sl2g(), Automorphism::make(sl2g(), diagonal({-1, 1, -1})), GradeKind::plain);
  CHECK(gd.finite_order == 2u);
  RationalSeries rs = rational_series(gd);
  CHECK(rs.polynomial_part.size() == 2);
  CHECK(rs.polynomial_part[0] == 3);
  CHECK_FALSE(rs.positive_tail.has_value());
  // Periodic by construction.
  for (long k = -3; k < 6; ++k) {
    Automorphism sk = Automorphism::make(sl2g(), power(diagonal({-1, 1, -1}), k));
    CHECK(derivation_space(sl2g(), sk, Automorphism::identity(3)).dimension() == gd.dims.at(((k % 2) + 2) % 2));
  }
}

TEST_CASE("period detection on synthetic windows") {
  CHECK(detect_period(window(8, [](long) { return 2u; }), 8) == Period{0, 1});
  CHECK_FALSE(detect_period(window(8, [](long k) { return static_cast<std::size_t>(k + 8); }), 8).has_value());
  auto two = window(8, [](long k) { return k == 0 ? 5u : (k % 2 == 0 ? 2u : 1u); });
  CHECK(detect_period(two, 8) == Period{1, 2});
}

TEST_CASE("series expansion reproduces periodic windows") {
  GradedDims gd;
  gd.window = 9;
  gd.dims = window(9, [](long k) {
    if (k == 0) return 4u;
    if (k > 0) return k % 3 == 0 ? 2u : 1u;
    return 0u;
  });
  auto p = detect_period(gd);
  REQUIRE(p);
  RationalSeries rs = rational_series(gd, *p);
  CHECK(rs.expand(-9, 9) == gd.dims);
  GradedDims bad = gd;
  bad.dims = window(4, [](long k) { return static_cast<std::size_t>(k * k); });
  bad.window = 4;
  try {
    rational_series(bad);
    FAIL("expected NoPeriod");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPeriod);
  }
}

TEST_CASE("zero dims away from the origin") {
  GradedDims gd;
  gd.window = 5;
  gd.dims = window(5, [](long k) { return k == 0 ? 7u : 0u; });
  RationalSeries rs = rational_series(gd);
  CHECK(rs.str() == "7");
  CHECK(rs.expand(-5, 5) == gd.dims);
}
