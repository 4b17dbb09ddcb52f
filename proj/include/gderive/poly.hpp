#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gderive/rational.hpp"

namespace gderive {

// Ordered variable names; the first name is the largest in lex order.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;  // UnknownVariable

  bool operator==(const PolyRing& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
RingPtr make_ring(std::vector<std::string> names);
// Same variable names in the same order.
bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<unsigned>;

struct Term {
  Exponents exp;
  Rational coeff;
};

bool divides(const Exponents& a, const Exponents& b);
Exponents exponent_lcm(const Exponents& a, const Exponents& b);
Exponents exponent_sub(const Exponents& a, const Exponents& b);

// Polynomial over Q with terms sorted by decreasing lex order. A
// default-constructed value is a ring-less zero that adopts the ring of
// whatever it is combined with.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly variable(RingPtr ring, std::string_view name);
  static MultiPoly monomial(RingPtr ring, Exponents exp, const Rational& c);
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading_term() const { return terms_.front(); }
  const Exponents& leading_exponents() const { return terms_.front().exp; }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }
  unsigned total_degree() const;
  std::set<std::size_t> variables_used() const;

  MultiPoly monic() const;
  void drop_leading_term() { terms_.erase(terms_.begin()); }
  MultiPoly mul_term(const Exponents& exp, const Rational& c) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Rational& c);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string str() const;

 private:
  void adopt(const MultiPoly& o);
  MultiPoly& add_scaled(const MultiPoly& o, const Rational& s);

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// '+', '-', '*', '^' (nonnegative integer), division by a rational constant,
// parentheses, integer literals and the ring's variable names.
MultiPoly parse_poly(const RingPtr& ring, std::string_view text);

// Rewrites p into a ring that shares its variable names (possibly reordered
// or extended).
MultiPoly map_to_ring(const MultiPoly& p, const RingPtr& target);

// Partial evaluation; the result lives in the ring of remaining variables.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, Rational>& values);
RingPtr ring_without(const RingPtr& ring, const std::set<std::string>& removed);

// Replaces variable i of p's ring by images[i] (all in the target ring).
MultiPoly compose(const MultiPoly& p, const RingPtr& target,
                  const std::vector<MultiPoly>& images);

}  // namespace gderive
