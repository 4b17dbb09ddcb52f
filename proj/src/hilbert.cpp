#include "gderive/hilbert.hpp"

#include <sstream>

#include "gderive/derivations.hpp"

namespace gderive {

std::string_view grade_kind_name(GradeKind k) { return k == GradeKind::plain ? "plain" : "plus"; }

GradeKind parse_grade_kind(std::string_view text) {
  if (text == "plain") return GradeKind::plain;
  if (text == "plus") return GradeKind::plus;
  throw Error(ErrorCode::ParseError, "unknown grading kind '" + std::string(text) + "'");
}

GradedDims graded_dims(const LieAlgebra& g, const Automorphism& sigma, GradeKind kind,
                       std::size_t window, std::size_t order_bound) {
  if (window < 1) throw Error(ErrorCode::DimensionMismatch, "window must be at least 1");
  GradedDims gd;
  gd.sigma = sigma.matrix();
  gd.kind = kind;
  gd.finite_order = matrix_order(sigma.matrix(), order_bound);

  const std::size_t n = g.dim();
  auto solve_grade = [&](long k) {
    Automorphism s = Automorphism::make(g, power(sigma.matrix(), k));
    return kind == GradeKind::plain ? derivation_space(g, s, Automorphism::identity(n)).dimension()
                                    : plus_interior(g, s).dimension();
  };
  if (gd.finite_order) {
    gd.window = *gd.finite_order;
    for (long k = 0; k < static_cast<long>(gd.window); ++k) gd.dims[k] = solve_grade(k);
  } else {
    gd.window = window;
    const long K = static_cast<long>(window);
    for (long k = -K; k <= K; ++k) gd.dims[k] = solve_grade(k);
  }
  return gd;
}

std::optional<Period> detect_period(const std::map<long, std::size_t>& dims, std::size_t window) {
  const long K = static_cast<long>(window);
  auto at = [&](long k) { return dims.at(k); };
  for (long p = 1; 2 * p <= K; ++p)
    for (long c = 0; c + 2 * p <= K; ++c) {
      bool ok = true;
      for (long k = c; k + p <= K && ok; ++k)
        ok = at(k) == at(k + p) && at(-k) == at(-k - p);
      if (ok) return Period{static_cast<std::size_t>(c), static_cast<std::size_t>(p)};
    }
  return std::nullopt;
}

std::optional<Period> detect_period(const GradedDims& gd) {
  if (gd.finite_order)
    throw Error(ErrorCode::FiniteOrderInput,
                "sigma has finite order " + std::to_string(*gd.finite_order) +
                    "; the grading is a full cycle");
  return detect_period(gd.dims, gd.window);
}

RationalSeries rational_series(const GradedDims& gd) {
  if (gd.finite_order) {
    RationalSeries s;
    for (const auto& [k, d] : gd.dims) s.polynomial_part.push_back(d);
    s.certification = "exact: sigma has order " + std::to_string(*gd.finite_order);
    return s;
  }
  auto period = detect_period(gd);
  if (!period)
    throw Error(ErrorCode::NoPeriod,
                "no period fits the window K = " + std::to_string(gd.window));
  return rational_series(gd, *period);
}

RationalSeries rational_series(const GradedDims& gd, const Period& period) {
  if (gd.finite_order) return rational_series(gd);
  if (period.period == 0) throw Error(ErrorCode::NoPeriod, "period must be positive");
  // Tails start at grade >= 1 so that grade 0 sits in the polynomial part only.
  const long start = std::max<long>(1, static_cast<long>(period.cutoff));
  const long p = static_cast<long>(period.period);
  if (start + p - 1 > static_cast<long>(gd.window))
    throw Error(ErrorCode::NoPeriod, "period does not fit the window");
  RationalSeries s;
  s.low = -(start - 1);
  for (long k = s.low; k < start; ++k) s.polynomial_part.push_back(gd.dims.at(k));
  GeometricTail pos{{}, static_cast<std::size_t>(start), static_cast<std::size_t>(p), 1};
  GeometricTail neg{{}, static_cast<std::size_t>(start), static_cast<std::size_t>(p), -1};
  for (long i = 0; i < p; ++i) {
    pos.numerator.push_back(gd.dims.at(start + i));
    neg.numerator.push_back(gd.dims.at(-(start + i)));
  }
  s.positive_tail = pos;
  s.negative_tail = neg;
  s.certification = "window-certified to K = " + std::to_string(gd.window);
  return s;
}

std::map<long, std::size_t> RationalSeries::expand(long lo, long hi) const {
  std::map<long, std::size_t> out;
  for (long k = lo; k <= hi; ++k) out[k] = 0;
  for (std::size_t i = 0; i < polynomial_part.size(); ++i) {
    long k = low + static_cast<long>(i);
    if (k >= lo && k <= hi) out[k] += polynomial_part[i];
  }
  for (const auto* tail : {&positive_tail, &negative_tail}) {
    if (!*tail) continue;
    const GeometricTail& t = **tail;
    for (std::size_t i = 0; i < t.numerator.size(); ++i)
      for (long e = static_cast<long>(t.start + i);; e += static_cast<long>(t.period)) {
        long k = t.sign * e;
        if (k < lo || k > hi) break;
        out[k] += t.numerator[i];
      }
  }
  return out;
}

namespace {

std::string power_of_t(long e) {
  if (e == 0) return "1";
  if (e == 1) return "t";
  return "t^" + std::to_string(e);
}

std::string term(std::size_t c, long e) {
  if (e == 0) return std::to_string(c);
  if (c == 1) return power_of_t(e);
  return std::to_string(c) + "*" + power_of_t(e);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
  return out;
}

}  // namespace

std::string RationalSeries::str() const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < polynomial_part.size(); ++i)
    if (polynomial_part[i] != 0) parts.push_back(term(polynomial_part[i], low + static_cast<long>(i)));
  for (const auto* tail : {&positive_tail, &negative_tail}) {
    if (!*tail) continue;
    const GeometricTail& t = **tail;
    std::vector<std::string> num;
    for (std::size_t i = 0; i < t.numerator.size(); ++i)
      if (t.numerator[i] != 0)
        num.push_back(term(t.numerator[i], t.sign * static_cast<long>(t.start + i)));
    if (num.empty()) continue;
    std::string n = num.size() == 1 ? num.front() : "(" + join(num) + ")";
    parts.push_back(n + "/(1 - " + power_of_t(t.sign * static_cast<long>(t.period)) + ")");
  }
  return parts.empty() ? "0" : join(parts);
}

}  // namespace gderive
