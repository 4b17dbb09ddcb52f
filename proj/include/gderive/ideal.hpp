#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gderive/poly.hpp"

namespace gderive {

struct DivisionResult {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

// p = sum q_i g_i + r, no term of r divisible by any leading term.
DivisionResult divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors);
// Remainder only; cheaper than divide when quotients are not needed.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

struct GroebnerOptions {
  std::size_t max_generated = 5000;
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  // Present on ideals returned by buchberger().
  const std::optional<std::vector<MultiPoly>>& reduced_basis() const { return basis_; }

 private:
  friend Ideal buchberger(const Ideal& ideal, const GroebnerOptions& options);
  RingPtr ring_;
  std::vector<MultiPoly> generators_;
  std::optional<std::vector<MultiPoly>> basis_;
};

// Reduced lex Groebner basis; throws DegreeGuardExceeded past the cap.
Ideal buchberger(const Ideal& ideal, const GroebnerOptions& options = {});
bool member(const MultiPoly& p, const Ideal& ideal);
Ideal ideal_product(const Ideal& a, const Ideal& b);
bool contains(const Ideal& outer, const Ideal& inner);
Ideal map_to_ring(const Ideal& ideal, const RingPtr& target);
Ideal substitute(const Ideal& ideal, const std::map<std::string, Rational>& values);

struct PrimeCertificate {
  bool certified = false;
  std::vector<std::string> leading_vars;
  std::vector<std::string> free_vars;
  std::string reason;
};

// Certifies primality when the reduced basis is {x_i - f_i} with distinct
// leading variables x_i; then the quotient is a polynomial ring in the rest.
PrimeCertificate triangular_prime_check(const Ideal& ideal);

}  // namespace gderive
