#include "gderive/ideal.hpp"

#include <algorithm>

#include "gderive/error.hpp"

namespace gderive {

namespace {

// Index of the first divisor whose leading monomial divides exp.
std::optional<std::size_t> find_reducer(const Exponents& exp,
                                        const std::vector<MultiPoly>& divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (!divisors[i].is_zero() && divides(divisors[i].leading_exponents(), exp)) return i;
  return std::nullopt;
}

}  // namespace

DivisionResult divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors) {
  DivisionResult out;
  for (const auto& d : divisors) out.quotients.emplace_back(d.ring() ? d.ring() : p.ring());
  out.remainder = MultiPoly(p.ring());
  MultiPoly rest = p;
  std::vector<Term> remainder_terms;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (auto i = find_reducer(lt.exp, divisors)) {
      const MultiPoly& g = divisors[*i];
      Exponents m = exponent_sub(lt.exp, g.leading_exponents());
      Rational c = lt.coeff / g.leading_coefficient();
      out.quotients[*i] += MultiPoly::monomial(rest.ring(), m, c);
      rest -= g.mul_term(m, c);
    } else {
      remainder_terms.push_back(lt);
      rest.drop_leading_term();
    }
  }
  if (p.ring()) out.remainder = MultiPoly::from_terms(p.ring(), std::move(remainder_terms));
  return out;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  MultiPoly rest = p;
  std::vector<Term> remainder_terms;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (auto i = find_reducer(lt.exp, basis)) {
      const MultiPoly& g = basis[*i];
      rest -= g.mul_term(exponent_sub(lt.exp, g.leading_exponents()),
                         lt.coeff / g.leading_coefficient());
    } else {
      remainder_terms.push_back(lt);
      rest.drop_leading_term();
    }
  }
  if (!p.ring()) return p;
  return MultiPoly::from_terms(p.ring(), std::move(remainder_terms));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.ring() ? f.ring() : g.ring());
  Exponents l = exponent_lcm(f.leading_exponents(), g.leading_exponents());
  MultiPoly a = f.mul_term(exponent_sub(l, f.leading_exponents()), f.leading_coefficient().inverse());
  MultiPoly b = g.mul_term(exponent_sub(l, g.leading_exponents()), g.leading_coefficient().inverse());
  return a - b;
}

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (auto& g : generators_) {
    if (!g.ring()) g = MultiPoly(ring_);
    else if (!same_ring(g.ring(), ring_))
      throw Error(ErrorCode::DimensionMismatch, "generator lives in a different ring");
  }
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& generators) {
  std::vector<MultiPoly> gens;
  for (const auto& s : generators) gens.push_back(parse_poly(ring, s));
  return Ideal(ring, std::move(gens));
}

Ideal buchberger(const Ideal& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  std::vector<MultiPoly> G;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) G.push_back(g.monic());

  auto unit = [&]() {
    Ideal out(ring, {MultiPoly::constant(ring, Rational(1))});
    out.basis_ = out.generators_;
    return out;
  };
  for (const auto& g : G)
    if (g.is_constant()) return unit();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  std::size_t generated = 0;
  while (!pairs.empty()) {
    // Normal selection: smallest lcm of leading monomials.
    std::size_t best = 0;
    Exponents best_lcm;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      Exponents l = exponent_lcm(G[pairs[k].first].leading_exponents(),
                                 G[pairs[k].second].leading_exponents());
      if (k == 0 || l < best_lcm) {
        best = k;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    const Exponents& li = G[i].leading_exponents();
    const Exponents& lj = G[j].leading_exponents();
    bool coprime = true;
    for (std::size_t v = 0; v < li.size(); ++v)
      if (li[v] > 0 && lj[v] > 0) { coprime = false; break; }
    if (coprime) continue;

    MultiPoly h = normal_form(s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) return unit();
    if (++generated > options.max_generated)
      throw Error(ErrorCode::DegreeGuardExceeded,
                  "Groebner computation exceeded " + std::to_string(options.max_generated) +
                      " generated polynomials");
    for (std::size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
    G.push_back(std::move(h));
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      if (divides(G[b].leading_exponents(), G[a].leading_exponents()) &&
          (G[a].leading_exponents() != G[b].leading_exponents() || b < a))
        redundant = true;
    }
    if (!redundant) minimal.push_back(G[a]);
  }
  // Reduced basis: tail-reduce each element against the others.
  std::vector<MultiPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MultiPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(normal_form(minimal[a], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& x, const MultiPoly& y) {
    return x.leading_exponents() > y.leading_exponents();
  });
  Ideal out(ring, reduced);
  out.basis_ = std::move(reduced);
  return out;
}

bool member(const MultiPoly& p, const Ideal& ideal) {
  if (p.is_zero()) return true;
  if (p.ring() && !same_ring(p.ring(), ideal.ring()))
    throw Error(ErrorCode::DimensionMismatch, "polynomial lives in a different ring");
  if (ideal.reduced_basis()) return normal_form(p, *ideal.reduced_basis()).is_zero();
  return normal_form(p, *buchberger(ideal).reduced_basis()).is_zero();
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorCode::DimensionMismatch, "ideals live in different rings");
  std::vector<MultiPoly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

bool contains(const Ideal& outer, const Ideal& inner) {
  if (!same_ring(outer.ring(), inner.ring()))
    throw Error(ErrorCode::DimensionMismatch, "ideals live in different rings");
  Ideal gb = outer.reduced_basis() ? outer : buchberger(outer);
  for (const auto& g : inner.generators())
    if (!member(g, gb)) return false;
  return true;
}

Ideal map_to_ring(const Ideal& ideal, const RingPtr& target) {
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_to_ring(g, target));
  return Ideal(target, std::move(gens));
}

Ideal substitute(const Ideal& ideal, const std::map<std::string, Rational>& values) {
  std::set<std::string> removed;
  for (const auto& [name, v] : values) {
    ideal.ring()->require(name);
    removed.insert(name);
  }
  RingPtr target = ring_without(ideal.ring(), removed);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_to_ring(substitute(g, values), target));
  return Ideal(target, std::move(gens));
}

PrimeCertificate triangular_prime_check(const Ideal& ideal) {
  PrimeCertificate cert;
  Ideal gb = ideal.reduced_basis() ? ideal : buchberger(ideal);
  const auto& basis = *gb.reduced_basis();
  const auto& names = ideal.ring()->names();
  std::vector<bool> leading(names.size(), false);
  for (const auto& g : basis) {
    if (g.is_constant()) {
      cert.reason = "unit ideal";
      return cert;
    }
    const Exponents& e = g.leading_exponents();
    unsigned degree = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        degree += e[i];
        var = i;
      }
    if (degree != 1) {
      cert.reason = "leading term of " + g.str() + " is not a single variable";
      return cert;
    }
    if (leading[var]) {
      cert.reason = "repeated leading variable " + names[var];
      return cert;
    }
    leading[var] = true;
  }
  // Reduced-basis tails cannot contain leading variables, so the quotient is
  // the polynomial ring in the remaining variables.
  for (std::size_t i = 0; i < names.size(); ++i)
    (leading[i] ? cert.leading_vars : cert.free_vars).push_back(names[i]);
  cert.certified = true;
  cert.reason = "triangular-linear reduced basis";
  return cert;
}

}  // namespace gderive
