#include "gderive/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gderive/error.hpp"

namespace gderive {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw Error(ErrorCode::ParseError, "invalid variable name '" + n + "'");
    if (!seen.insert(n).second)
      throw Error(ErrorCode::ParseError, "duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return *i;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents exponent_sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Exponents(ring->size(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  MultiPoly p(ring);
  p.terms_.push_back({std::move(e), Rational(1)});
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->require(name);
  return variable(std::move(ring), i);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exp, const Rational& c) {
  if (exp.size() != ring->size())
    throw Error(ErrorCode::DimensionMismatch, "exponent vector has the wrong length");
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(exp), c});
  return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Exponents, Rational, std::greater<>> acc;
  for (auto& t : terms) {
    if (t.exp.size() != ring->size())
      throw Error(ErrorCode::DimensionMismatch, "exponent vector has the wrong length");
    acc[t.exp] += t.coeff;
  }
  MultiPoly p(std::move(ring));
  for (auto& [e, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.front().exp;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (auto x : t.exp) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::set<std::size_t> MultiPoly::variables_used() const {
  std::set<std::size_t> out;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] > 0) out.insert(i);
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

MultiPoly MultiPoly::mul_term(const Exponents& exp, const Rational& c) const {
  MultiPoly p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e = t.exp;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += exp[i];
    p.terms_.push_back({std::move(e), t.coeff * c});
  }
  return p;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (ring_ && point.size() != ring_->size())
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has the wrong length");
  Rational acc;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      for (unsigned k = 0; k < t.exp[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

void MultiPoly::adopt(const MultiPoly& o) {
  if (!ring_) {
    ring_ = o.ring_;
    return;
  }
  if (o.ring_ && !same_ring(ring_, o.ring_))
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different rings");
}

MultiPoly& MultiPoly::add_scaled(const MultiPoly& o, const Rational& s) {
  if (&o == this) {
    MultiPoly copy = o;
    return add_scaled(copy, s);
  }
  adopt(o);
  if (o.terms_.empty() || s.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp > b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp > a->exp) {
      out.push_back({b->exp, b->coeff * s});
      ++b;
    } else {
      Rational c = a->coeff + b->coeff * s;
      if (!c.is_zero()) out.push_back({std::move(a->exp), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) { return add_scaled(o, Rational(1)); }
MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return add_scaled(o, Rational(-1)); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r.adopt(b);
  if (a.is_zero() || b.is_zero()) {
    r.terms_.clear();
    return r;
  }
  std::map<Exponents, Rational, std::greater<>> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Exponents e = s.exp;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exp[i];
      acc[std::move(e)] += s.coeff * t.coeff;
    }
  r.terms_.clear();
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({e, c});
  return r;
}

MultiPoly operator*(const MultiPoly& a, const Rational& c) {
  MultiPoly r(a.ring_);
  if (c.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Rational(-1); }

MultiPoly MultiPoly::pow(unsigned e) const {
  if (!ring_) {
    if (e == 0) throw Error(ErrorCode::DimensionMismatch, "power of a ring-less polynomial");
    return *this;
  }
  MultiPoly result = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coeff.sign() < 0;
    Rational mag = t.coeff.abs();
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      std::string f = ring_->names()[i];
      if (t.exp[i] > 1) f += "^" + std::to_string(t.exp[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "polynomial '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc * d.leading_coefficient().inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(ring_, Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return MultiPoly::variable(ring_, text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

MultiPoly map_to_ring(const MultiPoly& p, const RingPtr& target) {
  if (!p.ring()) return MultiPoly(target);
  std::vector<std::size_t> where(p.ring()->size());
  for (std::size_t i = 0; i < where.size(); ++i) where[i] = target->require(p.ring()->names()[i]);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i) e[where[i]] = t.exp[i];
    terms.push_back({std::move(e), t.coeff});
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

RingPtr ring_without(const RingPtr& ring, const std::set<std::string>& removed) {
  std::vector<std::string> keep;
  for (const auto& n : ring->names())
    if (!removed.count(n)) keep.push_back(n);
  return make_ring(std::move(keep));
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, Rational>& values) {
  const RingPtr& ring = p.ring();
  if (!ring) return p;
  std::set<std::string> removed;
  for (const auto& [name, v] : values) {
    ring->require(name);
    removed.insert(name);
  }
  RingPtr target = ring_without(ring, removed);
  std::vector<MultiPoly> images;
  for (const auto& n : ring->names()) {
    auto it = values.find(n);
    images.push_back(it == values.end() ? MultiPoly::variable(target, n)
                                        : MultiPoly::constant(target, it->second));
  }
  return compose(p, target, images);
}

MultiPoly compose(const MultiPoly& p, const RingPtr& target,
                  const std::vector<MultiPoly>& images) {
  if (!p.ring()) return MultiPoly(target);
  if (images.size() != p.ring()->size())
    throw Error(ErrorCode::DimensionMismatch, "composition needs one image per variable");
  MultiPoly result(target);
  // Cache powers per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * map_to_ring(images[i], target));
    return cache[e];
  };
  for (const auto& t : p.terms()) {
    MultiPoly m = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] > 0) m = m * power_of(i, t.exp[i]);
    result += m;
  }
  return result;
}

}  // namespace gderive
