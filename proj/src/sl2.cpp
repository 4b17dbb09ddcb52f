#include "gderive/sl2.hpp"

#include <numeric>
#include <sstream>

#include "gderive/derivations.hpp"
#include "gderive/subspace.hpp"

namespace gderive {

Matrix evaluate(const PolyMatrix& m, const Params& values) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const MultiPoly& p = m(r, c);
      if (p.is_zero()) continue;
      const auto& names = p.ring()->names();
      std::vector<Rational> point(names.size());
      for (std::size_t v : p.variables_used()) {
        auto it = values.find(names[v]);
        if (it == values.end())
          throw Error(ErrorCode::UnknownVariable, "no value for variable '" + names[v] + "'");
        point[v] = it->second;
      }
      out(r, c) = p.evaluate(point);
    }
  return out;
}

PolyMatrix compose(const PolyMatrix& m, const RingPtr& target,
                   const std::vector<MultiPoly>& images) {
  PolyMatrix out(m.rows(), m.cols(), MultiPoly(target));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = compose(m(r, c), target, images);
  return out;
}

namespace sl2 {

namespace {

const std::vector<std::string> kEntryNames = {"x11", "x12", "x13", "x21", "x22",
                                              "x23", "x31", "x32", "x33"};

const LieAlgebra& sl2_algebra() {
  static const LieAlgebra g = builtin("sl2");
  return g;
}

Rational require_param(const Params& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end())
    throw Error(ErrorCode::UnknownVariable, "missing parameter '" + name + "'");
  return it->second;
}

MultiPoly var(const RingPtr& ring, std::string_view name) {
  return MultiPoly::variable(ring, name);
}

MultiPoly num(const RingPtr& ring, const Rational& c) { return MultiPoly::constant(ring, c); }

PolyMatrix poly_matrix(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(rows.size(), rows.front().size(), MultiPoly(ring));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = parse_poly(ring, rows[r][c]);
  return m;
}

std::vector<MultiPoly> bracket_poly(const LieAlgebra& g, const std::vector<MultiPoly>& x,
                                    const std::vector<MultiPoly>& y) {
  const std::size_t n = g.dim();
  std::vector<MultiPoly> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      MultiPoly p = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!g.constant(i, j, k).is_zero()) out[k] += p * g.constant(i, j, k);
    }
  }
  return out;
}

std::vector<MultiPoly> column(const PolyMatrix& m, std::size_t c) { return m.column(c); }

// Primitive integer form with positive leading coefficient.
MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, content = 0;
  for (const auto& t : p.terms()) den = lcm(den, t.coeff.denominator());
  for (const auto& t : p.terms()) content = gcd(content, mpz_class(t.coeff.numerator() * den / t.coeff.denominator()));
  Rational scale(mpq_class(den, content));
  if (p.leading_coefficient().sign() < 0) scale = -scale;
  return p * scale;
}

std::string matrix_string(const PolyMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

// General derivation over parameters a, b, c of ring.
PolyMatrix general_derivation(const RingPtr& ring) {
  return poly_matrix(ring, {{"a", "b", "0"}, {"-2*c", "0", "-2*b"}, {"0", "c", "-a"}});
}

// Line through the origin for the second component, with a linear functional
// ell normalised so that ell(line) = 1.
struct Line {
  PolyMatrix v;
  MultiPoly ell;
};

Line component_line(const SymbolicFamily& sf) {
  const RingPtr& A = sf.ring;
  switch (sf.family) {
    case Family::B:
      return {poly_matrix(A, {{"0", "-1/2", "1/2*y"}, {"0", "0", "1"}, {"0", "0", "0"}}),
              var(A, "x32")};
    case Family::C:
      return {poly_matrix(A, {{"0", "0", "0"}, {"-2", "0", "0"}, {"-y", "1", "0"}}),
              var(A, "x23")};
    case Family::AB:
      return {poly_matrix(A, {{"t*(y*t + 2)", "y*t + 1", "-y"},
                              {"-2*t^2*(y*t + 1)", "-2*y*t^2", "2*(y*t - 1)"},
                              {"-y*t^4", "-t^2*(y*t - 1)", "t*(y*t - 2)"}}),
              parse_poly(A, "x21 + t*x31")};
  }
  throw Error(ErrorCode::UnknownName, "unknown family");
}

Ideal graph_ideal(const RingPtr& A, const Line& line) {
  std::vector<MultiPoly> gens;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      MultiPoly g = var(A, entry_variable(r, c)) - line.ell * line.v(r, c);
      if (!g.is_zero()) gens.push_back(g);
    }
  return Ideal(A, gens);
}

// Images of the ambient ring's variables under a parametric form.
std::vector<MultiPoly> form_images(const RingPtr& A, const ParametricForm& form) {
  std::vector<MultiPoly> images;
  for (const auto& name : A->names()) {
    bool found = false;
    for (std::size_t r = 0; r < 3 && !found; ++r)
      for (std::size_t c = 0; c < 3 && !found; ++c)
        if (entry_variable(r, c) == name) {
          images.push_back(form.D(r, c).ring() ? form.D(r, c) : MultiPoly(form.ring));
          found = true;
        }
    if (found) continue;
    auto it = form.family_values.find(name);
    if (it == form.family_values.end())
      throw Error(ErrorCode::UnknownVariable, "parametric form leaves '" + name + "' unset");
    images.push_back(it->second);
  }
  return images;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::AB: return "ab";
  }
  return "b";
}

Family parse_family(std::string_view text) {
  if (text == "b" || text == "B") return Family::B;
  if (text == "c" || text == "C") return Family::C;
  if (text == "ab" || text == "AB") return Family::AB;
  throw Error(ErrorCode::UnknownName, "unknown family '" + std::string(text) + "'");
}

std::string entry_variable(std::size_t r, std::size_t c) {
  return "x" + std::to_string(c + 1) + std::to_string(r + 1);
}

Matrix derivation_form(const Rational& a, const Rational& b, const Rational& c) {
  return Matrix::from_rows({{a, b, 0}, {Rational(-2) * c, 0, Rational(-2) * b}, {0, c, -a}});
}

Classification classify_derivation(const Rational& a, const Rational& b, const Rational& c) {
  Classification out;
  out.D = derivation_form(a, b, c);
  Matrix p = out.D;
  for (std::size_t n = 0; n < 3; ++n) {
    out.ranks[n] = rank(p);
    if (n < 2) p = p * out.D;
  }
  out.nilpotent = is_zero_matrix(p);
  Rational bc = b * c;
  out.predicted_nilpotent = (bc.is_zero() && a.is_zero()) ||
                            (!bc.is_zero() && a * a == Rational(4) * bc);
  out.agrees = out.nilpotent == out.predicted_nilpotent;
  return out;
}

Matrix D_b(const Rational& b) {
  return Matrix::from_rows({{0, b, 0}, {0, 0, Rational(-2) * b}, {0, 0, 0}});
}

Matrix D_c(const Rational& c) {
  return Matrix::from_rows({{0, 0, 0}, {Rational(-2) * c, 0, 0}, {0, c, 0}});
}

Matrix D_ab(const Rational& a, const Rational& b) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroParameterA, "the ab family needs a != 0");
  if (b.is_zero()) throw Error(ErrorCode::ZeroParameterB, "the ab family needs b != 0");
  return Matrix::from_rows({{a, b, 0},
                            {-(a * a) / (Rational(2) * b), 0, Rational(-2) * b},
                            {0, a * a / (Rational(4) * b), -a}});
}

Matrix family_sigma(Family f, const Params& params) {
  switch (f) {
    case Family::B: return exp_nilpotent(D_b(require_param(params, "b")));
    case Family::C: return exp_nilpotent(D_c(require_param(params, "c")));
    case Family::AB:
      return exp_nilpotent(D_ab(require_param(params, "a"), require_param(params, "b")));
  }
  throw Error(ErrorCode::UnknownName, "unknown family");
}

SymbolicFamily symbolic_family(Family f) {
  SymbolicFamily sf;
  sf.family = f;
  std::vector<std::string> names = kEntryNames;
  sf.coordinates = f == Family::AB ? std::vector<std::string>{"t", "y"}
                                   : std::vector<std::string>{"y"};
  names.insert(names.end(), sf.coordinates.begin(), sf.coordinates.end());
  sf.ring = make_ring(names);
  PolyMatrix nil;
  switch (f) {
    case Family::B:
      nil = poly_matrix(sf.ring, {{"0", "y", "0"}, {"0", "0", "-2*y"}, {"0", "0", "0"}});
      break;
    case Family::C:
      nil = poly_matrix(sf.ring, {{"0", "0", "0"}, {"-2*y", "0", "0"}, {"0", "y", "0"}});
      break;
    case Family::AB:
      nil = poly_matrix(sf.ring, {{"2*t*y", "y", "0"},
                                  {"-2*t^2*y", "0", "-2*y"},
                                  {"0", "t^2*y", "-2*t*y"}});
      break;
  }
  sf.sigma = exp_nilpotent_generic(nil, num(sf.ring, Rational(1)));
  return sf;
}

Params coordinate_values(Family f, const Params& params) {
  switch (f) {
    case Family::B: return {{"y", require_param(params, "b")}};
    case Family::C: return {{"y", require_param(params, "c")}};
    case Family::AB: {
      Rational a = require_param(params, "a"), b = require_param(params, "b");
      if (a.is_zero()) throw Error(ErrorCode::ZeroParameterA, "the ab family needs a != 0");
      if (b.is_zero()) throw Error(ErrorCode::ZeroParameterB, "the ab family needs b != 0");
      return {{"t", a / (Rational(2) * b)}, {"y", b}};
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown family");
}

std::vector<MultiPoly> DerivationIdeal::off_diagonal() const {
  std::vector<MultiPoly> out;
  for (const auto& r : raw)
    if (r.i != r.j) out.push_back(r.poly);
  return out;
}

DerivationIdeal derivation_ideal(Family f) {
  const LieAlgebra& g = sl2_algebra();
  SymbolicFamily sf = symbolic_family(f);
  const RingPtr& A = sf.ring;
  PolyMatrix D(3, 3, MultiPoly(A));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) D(r, c) = var(A, entry_variable(r, c));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) pairs.emplace_back(i, j);
  for (std::size_t i = 0; i < 3; ++i) pairs.emplace_back(i, i);

  std::vector<RawGenerator> raw;
  for (auto [i, j] : pairs) {
    std::vector<MultiPoly> ei(3, MultiPoly(A));
    ei[i] = num(A, Rational(1));
    std::vector<MultiPoly> lhs(3, MultiPoly(A));
    for (std::size_t m = 0; m < 3; ++m) {
      const Rational& c = g.constant(i, j, m);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < 3; ++k) lhs[k] += D(k, m) * c;
    }
    auto a = bracket_poly(g, column(D, i), column(sf.sigma, j));
    auto b = bracket_poly(g, ei, column(D, j));
    for (std::size_t k = 0; k < 3; ++k) {
      MultiPoly res = normalize(lhs[k] - a[k] - b[k]);
      if (res.is_zero()) continue;
      bool seen = false;
      for (const auto& r : raw)
        if (r.poly == res) { seen = true; break; }
      if (!seen) raw.push_back({i + 1, j + 1, res});
    }
  }
  std::vector<MultiPoly> gens;
  for (const auto& r : raw) gens.push_back(r.poly);
  Ideal ideal(A, gens);
  Ideal simplified = buchberger(ideal);
  return {f, A, std::move(raw), std::move(ideal), std::move(simplified)};
}

KnownComponents known_components(Family f) {
  SymbolicFamily sf = symbolic_family(f);
  const RingPtr& A = sf.ring;
  KnownComponents kc{f, {}, {}, {}};

  // First component: the classical derivations at y = 0.
  {
    Component& p1 = kc.p1;
    p1.name = "p1";
    std::vector<std::string> params = {"a", "b", "c"};
    if (f == Family::AB) params.push_back("s");
    p1.form.ring = make_ring(params);
    p1.form.D = general_derivation(p1.form.ring);
    p1.form.family_values["y"] = MultiPoly(p1.form.ring);
    if (f == Family::AB) p1.form.family_values["t"] = var(p1.form.ring, "s");
    p1.form.description = "general derivation of sl2 with sigma = I";
    if (f == Family::B) {
      p1.ideal = Ideal::parse(A, {"x13", "x22", "x31", "y", "x11 + x33", "x12 + 2*x23",
                                  "x21 + 1/2*x32"});
      p1.provenance = "stated generators";
    } else {
      DerivationIdeal di = derivation_ideal(f);
      std::vector<MultiPoly> gens;
      for (const auto& r : di.raw) {
        MultiPoly at_zero = map_to_ring(substitute(r.poly, {{"y", Rational(0)}}), A);
        if (!at_zero.is_zero()) gens.push_back(normalize(at_zero));
      }
      gens.push_back(var(A, "y"));
      p1.ideal = Ideal(A, gens);
      p1.provenance = "derived: derivation equations at y = 0, plus y";
    }
  }

  // Second component: the graph of a line of solutions over the family coordinates.
  {
    Component& p2 = kc.p2;
    p2.name = "p2";
    Line line = component_line(sf);
    switch (f) {
      case Family::B: {
        p2.ideal = Ideal::parse(A, {"x11", "x12", "x13", "x22", "x23", "x33",
                                    "x21 + 1/2*x32", "x31 - 1/2*x32*y"});
        p2.provenance = "stated generators";
        p2.form.ring = make_ring({"a", "b"});
        p2.form.D = poly_matrix(p2.form.ring,
                                {{"0", "-a/2", "a*b/2"}, {"0", "0", "a"}, {"0", "0", "0"}});
        p2.form.family_values["y"] = var(p2.form.ring, "b");
        p2.form.description = "D = [[0,-a/2,ab/2],[0,0,a],[0,0,0]], sigma = exp(D_b)";
        break;
      }
      case Family::C: {
        p2.ideal = graph_ideal(A, line);
        p2.provenance = "derived: graph of the solution line over c";
        p2.form.ring = make_ring({"a", "c"});
        p2.form.D = poly_matrix(p2.form.ring,
                                {{"0", "0", "0"}, {"-2*a", "0", "0"}, {"-a*c", "a", "0"}});
        p2.form.family_values["y"] = var(p2.form.ring, "c");
        p2.form.description = "D = [[0,0,0],[-2a,0,0],[-ac,a,0]], sigma = exp(D_c)";
        break;
      }
      case Family::AB: {
        p2.ideal = graph_ideal(A, line);
        p2.provenance = "derived: graph of the solution line over (t, y), t = a/(2b), y = b";
        p2.form.ring = make_ring({"k", "t", "y"});
        std::vector<MultiPoly> images;
        for (const auto& name : A->names()) {
          if (name == "t" || name == "y") images.push_back(var(p2.form.ring, name));
          else images.push_back(MultiPoly(p2.form.ring));
        }
        p2.form.D = compose(line.v, p2.form.ring, images);
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t c = 0; c < 3; ++c)
            p2.form.D(r, c) = p2.form.D(r, c) * var(p2.form.ring, "k");
        p2.form.family_values["t"] = var(p2.form.ring, "t");
        p2.form.family_values["y"] = var(p2.form.ring, "y");
        p2.form.description = "D = k * v(t, y), sigma = exp(y N(t))";
        p2.change = CoordinateChange{"x21", "t*x31",
                                     {"x11", "x12", "x13", "x22", "x23", "x31", "x32", "x33",
                                      "x21", "t", "y"}};
        break;
      }
    }
  }

  switch (f) {
    case Family::B:
      kc.notes.push_back(
          "x22 is a generator of J: the simplified equations contain a22 = 0 although the "
          "listed generating set omits it");
      break;
    case Family::C:
      kc.notes.push_back(
          "the printed second-component form [[0,0,0],[-2a,0,a],[-2ac,0,0]] fails the "
          "derivation identity; the component is rebuilt from the solved system");
      break;
    case Family::AB:
      kc.notes.push_back(
          "coordinates t = a/(2b), y = b make sigma polynomial; the printed rational form "
          "fails the derivation identity and is replaced by the solved line k*v(t, y)");
      kc.notes.push_back(
          "primality of p2 is certified after the ring automorphism x21 -> x21 - t*x31");
      break;
  }
  return kc;
}

Matrix printed_form_c(const Rational& a, const Rational& c) {
  return Matrix::from_rows({{0, 0, 0}, {Rational(-2) * a, 0, a}, {Rational(-2) * a * c, 0, 0}});
}

Matrix printed_form_ab(const Rational& a, const Rational& b, const Rational& c) {
  const Rational d1 = a * b - 4, d2 = a * b * b - Rational(4) * b, d3 = a * a * b - Rational(4) * a;
  return Matrix::from_rows(
      {{(a * b + 4) / d1 * c, (-(a * a * b) - Rational(2) * a) / d2 * c,
        (-(a * a * a) / 4) / d2 * c},
       {(Rational(2) * a * b * b + Rational(4) * b) / d3 * c, (Rational(-2) * a * b) / d1 * c,
        (a - a * a * b / 2) / d2 * c},
       {(Rational(-4) * b * b * b) / d3 * c, (Rational(4) * a * b * b - Rational(8) * b) / d3 * c,
        c}});
}

DecompositionReport verify_decomposition(Family f) {
  DerivationIdeal di = derivation_ideal(f);
  KnownComponents kc = known_components(f);
  DecompositionReport rep;
  rep.family = f;
  for (const auto& r : di.raw) rep.ideal_generators.push_back(r.poly.str());
  for (const auto& g : *di.simplified.reduced_basis())
    rep.simplified_generators.push_back(g.str());

  for (const Component* comp : {&kc.p1, &kc.p2}) {
    ComponentReport cr;
    cr.name = comp->name;
    cr.provenance = comp->provenance;
    for (const auto& g : comp->ideal.generators()) cr.generators.push_back(g.str());
    cr.ideal_contains_J = contains(comp->ideal, di.ideal);

    PrimeCertificate cert;
    if (comp->change) {
      const auto& ch = *comp->change;
      const RingPtr& A = di.ring;
      std::vector<MultiPoly> images;
      for (const auto& name : A->names())
        images.push_back(name == ch.variable ? var(A, name) - parse_poly(A, ch.shift)
                                             : var(A, name));
      RingPtr reordered = make_ring(ch.order);
      std::vector<MultiPoly> gens;
      for (const auto& g : comp->ideal.generators())
        gens.push_back(map_to_ring(compose(g, A, images), reordered));
      cert = triangular_prime_check(Ideal(reordered, gens));
      cr.certificate = "after " + ch.variable + " -> " + ch.variable + " - " + ch.shift + ": " +
                       cert.reason;
    } else {
      cert = triangular_prime_check(comp->ideal);
      cr.certificate = cert.reason;
    }
    cr.prime_certified = cert.certified;
    cr.free_vars = cert.free_vars;
    cr.dimension = cert.certified ? cert.free_vars.size() : 0;

    cr.parametric_form = matrix_string(comp->form.D);
    auto images = form_images(di.ring, comp->form);
    bool identity = true;
    for (const auto& r : di.raw)
      if (!compose(r.poly, comp->form.ring, images).is_zero()) identity = false;
    for (const auto& g : comp->ideal.generators())
      if (!compose(g, comp->form.ring, images).is_zero()) identity = false;
    cr.parametric_identity = identity;
    rep.components.push_back(std::move(cr));
  }
  rep.product_in_J = contains(di.simplified, ideal_product(kc.p1.ideal, kc.p2.ideal));
  rep.x22_in_J = member(var(di.ring, "x22"), di.simplified);
  rep.notes = kc.notes;
  rep.all_verdicts = rep.product_in_J;
  for (const auto& c : rep.components)
    rep.all_verdicts = rep.all_verdicts && c.ideal_contains_J && c.prime_certified &&
                       c.parametric_identity;
  return rep;
}

std::size_t claimed_fixed_dimension(Family) { return 4; }

FixedReport fixed_param_dimension(Family f, const Params& params) {
  FixedReport rep;
  rep.family = f;
  rep.params = params;
  Params coords = coordinate_values(f, params);
  rep.sigma = family_sigma(f, params);

  DerivationIdeal di = derivation_ideal(f);
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : di.raw) {
    MultiPoly lin = substitute(r.poly, coords);
    if (lin.is_zero()) continue;
    std::vector<Rational> row(9);
    for (const auto& t : lin.terms()) {
      std::size_t deg = std::accumulate(t.exp.begin(), t.exp.end(), 0U);
      if (deg != 1) throw Error(ErrorCode::DimensionMismatch, "substituted system is not linear");
      std::size_t v = 0;
      while (t.exp[v] == 0) ++v;
      const std::string& name = lin.ring()->names()[v];
      // x_{ij} is entry (j-1, i-1)
      std::size_t r0 = static_cast<std::size_t>(name[2] - '1');
      std::size_t c0 = static_cast<std::size_t>(name[1] - '1');
      row[r0 * 3 + c0] += t.coeff;
    }
    rows.push_back(std::move(row));
  }
  Subspace sol = rows.empty() ? Subspace::full(9) : kernel_basis(detail::rows_to_matrix(rows, 9));
  rep.dimension = sol.dim();
  rep.basis = subspace_matrices(sol, 3);

  const LieAlgebra& g = sl2_algebra();
  DerivationSpace ds = derivation_space(g, Automorphism::make(g, rep.sigma),
                                        Automorphism::identity(3));
  rep.gderiv_dimension = ds.dimension();
  rep.pipelines_agree = ds.coordinates == sol;
  rep.claimed_dimension = claimed_fixed_dimension(f);
  rep.discrepancy = rep.claimed_dimension != rep.dimension;
  return rep;
}

}  // namespace sl2
}  // namespace gderive
