#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gderive/lie_algebra.hpp"

namespace gderive {

enum class GradeKind { plain, plus };

std::string_view grade_kind_name(GradeKind k);
GradeKind parse_grade_kind(std::string_view text);

// k -> dim Der_{sigma^k}(g) (plain) or its plus interior (plus).
struct GradedDims {
  Matrix sigma;
  GradeKind kind = GradeKind::plain;
  std::size_t window = 0;                 // K, or the order m for finite-order sigma
  std::map<long, std::size_t> dims;       // |k| <= K, or 0 <= k < m
  std::optional<std::size_t> finite_order;
};

constexpr std::size_t kDefaultWindow = 8;
constexpr std::size_t kOrderBound = 64;

GradedDims graded_dims(const LieAlgebra& g, const Automorphism& sigma, GradeKind kind,
                       std::size_t window = kDefaultWindow, std::size_t order_bound = kOrderBound);

struct Period {
  std::size_t cutoff = 0;
  std::size_t period = 0;
  bool operator==(const Period&) const = default;
};

// Least period, then least cutoff, such that dims(k) = dims(k + p) for
// c <= k <= K - p on both sides. Needs c + 2p <= K so that every residue
// class repeats at least once inside the window.
std::optional<Period> detect_period(const GradedDims& gd);
std::optional<Period> detect_period(const std::map<long, std::size_t>& dims, std::size_t window);

// sum_i numerator[i] t^{sign*(start+i)} / (1 - t^{sign*period})
struct GeometricTail {
  std::vector<std::size_t> numerator;
  std::size_t start = 0;
  std::size_t period = 0;
  int sign = 1;
};

struct RationalSeries {
  long low = 0;                          // exponent of polynomial_part[0]
  std::vector<std::size_t> polynomial_part;
  std::optional<GeometricTail> positive_tail;
  std::optional<GeometricTail> negative_tail;
  std::string certification;

  // Coefficients for lo <= k <= hi.
  std::map<long, std::size_t> expand(long lo, long hi) const;
  std::string str() const;
};

// Finite-order input gives the polynomial sum_{k<m} dims(k) t^k.
RationalSeries rational_series(const GradedDims& gd);  // NoPeriod
RationalSeries rational_series(const GradedDims& gd, const Period& period);

}  // namespace gderive
