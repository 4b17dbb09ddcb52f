#include "gderive/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "gderive/reproduce.hpp"

namespace gderive {

namespace {

struct Options {
  std::string format = "json";
  std::string algebra, sigma, tau, kind = "plain", map, alpha, beta, gamma, witness;
  std::vector<std::string> gens;
  std::string scope = "all";
  std::size_t window = kDefaultWindow;
  std::size_t order_bound = kOrderBound;
  std::string hilbert_kind = "plain";
  std::string ideal, outer, inner, poly;
  std::size_t guard = GroebnerOptions{}.max_generated;
  std::string family;
  std::vector<std::string> fix;
  std::string report = "json";
  std::string only;
};

void emit(std::ostream& out, const std::string& format, const Json& j, const std::string& text) {
  if (format == "text") out << text;
  else out << j.dump(2) << "\n";
}

std::string basis_text(const std::vector<Matrix>& basis) {
  std::string out;
  for (const auto& m : basis) out += "  " + matrix_text(m) + "\n";
  return out;
}

LieAlgebra algebra_arg(const std::string& path) { return load_algebra(path).validated(); }

PairScope scope_arg(const std::string& s) {
  if (s == "all") return PairScope::all_ordered;
  if (s == "off-diagonal") return PairScope::off_diagonal;
  throw Error(ErrorCode::Usage, "--scope must be all or off-diagonal");
}

Params fix_args(const std::vector<std::string>& fix) {
  Params out;
  for (const auto& f : fix) {
    auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::Usage, "--fix expects name=value, got '" + f + "'");
    out[f.substr(0, eq)] = Rational::parse(f.substr(eq + 1));
  }
  return out;
}

Rational rational_arg(const std::string& s) { return Rational::parse(s); }

int cmd_check(const Options& o, std::ostream& out) {
  LieAlgebra g = load_algebra(o.algebra);
  auto violations = validate_lie(g);
  Json j{{"name", g.name()}, {"dim", g.dim()}, {"valid", violations.empty()}, {"violations", to_json(violations)}};
  std::ostringstream t;
  t << g.name() << " (dim " << g.dim() << "): " << (violations.empty() ? "Jacobi identity holds" : "Jacobi identity fails") << "\n";
  for (const auto& v : violations)
    t << "  (e" << v.i + 1 << ", e" << v.j + 1 << ", e" << v.k + 1 << "): " << vector_text(v.residual) << "\n";
  emit(out, o.format, j, t.str());
  return 0;
}

int cmd_derive(const Options& o, std::ostream& out) {
  LieAlgebra g = algebra_arg(o.algebra);
  Automorphism s = Automorphism::make(g, load_matrix(o.sigma));
  Automorphism t = o.tau.empty() ? Automorphism::identity(g.dim()) : Automorphism::make(g, load_matrix(o.tau));
  DerivationKind kind = parse_kind(o.kind);
  DerivationSpace ds;
  switch (kind) {
    case DerivationKind::plain: ds = derivation_space(g, s, t, scope_arg(o.scope)); break;
    case DerivationKind::plus: ds = plus_interior(g, s); break;
    case DerivationKind::minus: {
      std::vector<Automorphism> gens;
      for (const auto& f : o.gens) gens.push_back(Automorphism::make(g, load_matrix(f)));
      ds = minus_interior(g, s, gens);
      break;
    }
  }
  emit(out, o.format, to_json(ds),
       "dimension: " + std::to_string(ds.dimension()) + "\nbasis:\n" + basis_text(ds.basis));
  return 0;
}

int cmd_centroid(const Options& o, std::ostream& out) {
  LieAlgebra g = algebra_arg(o.algebra);
  DerivationSpace c = centroid(g, scope_arg(o.scope));
  Json j{{"dimension", c.dimension()}, {"basis", to_json(c.basis)}};
  emit(out, o.format, j, "dimension: " + std::to_string(c.dimension()) + "\nbasis:\n" + basis_text(c.basis));
  return 0;
}

int cmd_quasider(const Options& o, std::ostream& out) {
  LieAlgebra g = algebra_arg(o.algebra);
  Matrix D = load_matrix(o.map);
  auto w = quasiderivation_witness(g, D);
  Json j{{"quasiderivation", w.has_value()}, {"witness", w ? to_json(*w) : Json(nullptr)}};
  emit(out, o.format, j, w ? "quasiderivation, T = " + matrix_text(*w) + "\n" : "not a quasiderivation\n");
  return 0;
}

int cmd_abg(const Options& o, std::ostream& out) {
  LieAlgebra g = algebra_arg(o.algebra);
  Subspace s = abg_space(g, rational_arg(o.alpha), rational_arg(o.beta), rational_arg(o.gamma));
  auto basis = subspace_matrices(s, g.dim());
  Json j{{"alpha", o.alpha}, {"beta", o.beta}, {"gamma", o.gamma}, {"dimension", s.dim()}, {"basis", to_json(basis)}};
  emit(out, o.format, j, "dimension: " + std::to_string(s.dim()) + "\nbasis:\n" + basis_text(basis));
  return 0;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  LieAlgebra g = algebra_arg(o.algebra);
  Automorphism s = Automorphism::make(g, load_matrix(o.sigma));
  Automorphism t = Automorphism::make(g, load_matrix(o.tau));
  std::optional<Vector> w;
  if (!o.witness.empty()) w = vector_from_string(o.witness);
  auto r = intersection_report(g, s, t, w);
  std::ostringstream text;
  text << "dim Der_sigma: " << r.dim_sigma << "\ndim Der_tau: " << r.dim_tau
       << "\ndim intersection: " << r.dim_intersection << "\n" << basis_text(r.intersection_basis);
  if (r.witness)
    text << "witness " << vector_text(*r.witness) << " in centralizer: " << (*r.witness_in_centralizer ? "yes" : "no") << "\n";
  emit(out, o.format, to_json(r), text.str());
  return 0;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  LieAlgebra g = algebra_arg(o.algebra);
  Automorphism s = Automorphism::make(g, load_matrix(o.sigma));
  GradedDims gd = graded_dims(g, s, parse_grade_kind(o.hilbert_kind), o.window, o.order_bound);
  Json j = to_json(gd);
  std::ostringstream text;
  for (const auto& [k, d] : gd.dims) text << "k = " << k << ": " << d << "\n";
  std::optional<RationalSeries> series;
  if (gd.finite_order) {
    series = rational_series(gd);
    j["period"] = nullptr;
  } else if (auto p = detect_period(gd)) {
    series = rational_series(gd, *p);
    j["period"] = Json{{"cutoff", p->cutoff}, {"period", p->period}};
  } else {
    j["period"] = nullptr;
  }
  j["series"] = series ? to_json(*series) : Json(nullptr);
  if (series) text << "H(t) = " << series->str() << "  [" << series->certification << "]\n";
  else text << "no period fits the window\n";
  emit(out, o.format, j, text.str());
  return 0;
}

int cmd_groebner(const Options& o, std::ostream& out) {
  Ideal ideal = load_ideal(o.ideal);
  Ideal gb = buchberger(ideal, GroebnerOptions{o.guard});
  std::string text;
  for (const auto& p : *gb.reduced_basis()) text += p.str() + "\n";
  emit(out, o.format, to_json(gb), text);
  return 0;
}

int cmd_member(const Options& o, std::ostream& out) {
  Ideal ideal = load_ideal(o.ideal);
  MultiPoly p = parse_poly(ideal.ring(), o.poly);
  Ideal gb = buchberger(ideal, GroebnerOptions{o.guard});
  auto d = divide(p, *gb.reduced_basis());
  bool in = d.remainder.is_zero();
  Json quotients = Json::array();
  for (const auto& qt : d.quotients) quotients.push_back(qt.str());
  Json j{{"poly", p.str()}, {"member", in}, {"remainder", d.remainder.str()}, {"basis", to_json(gb)["gens"]}, {"quotients", quotients}};
  emit(out, o.format, j, std::string(in ? "member" : "not a member") + " (remainder " + d.remainder.str() + ")\n");
  return 0;
}

int cmd_contain(const Options& o, std::ostream& out) {
  Ideal outer = load_ideal(o.outer), inner = load_ideal(o.inner);
  if (!same_ring(outer.ring(), inner.ring())) inner = map_to_ring(inner, outer.ring());
  Ideal gb = buchberger(outer, GroebnerOptions{o.guard});
  Json missing = Json::array();
  for (const auto& g : inner.generators())
    if (!member(g, gb)) missing.push_back(g.str());
  bool ok = missing.empty();
  Json j{{"contains", ok}, {"missing", missing}};
  emit(out, o.format, j, ok ? "outer contains inner\n" : "outer does not contain inner; missing " + missing.dump() + "\n");
  return 0;
}

int cmd_prime_check(const Options& o, std::ostream& out) {
  Ideal ideal = load_ideal(o.ideal);
  auto cert = triangular_prime_check(buchberger(ideal, GroebnerOptions{o.guard}));
  std::string text = cert.certified ? "prime (" + cert.reason + "), dimension " + std::to_string(cert.free_vars.size()) + "\n"
                                    : "not certified: " + cert.reason + "\n";
  emit(out, o.format, to_json(cert), text);
  return 0;
}

int cmd_sl2(const Options& o, std::ostream& out) {
  sl2::Family f = sl2::parse_family(o.family);
  auto rep = sl2::verify_decomposition(f);
  Json j = to_json(rep);
  std::ostringstream text;
  text << "family " << sl2::family_name(f) << "\nJ generators:\n";
  for (const auto& g : rep.ideal_generators) text << "  " << g << "\n";
  text << "reduced basis:\n";
  for (const auto& g : rep.simplified_generators) text << "  " << g << "\n";
  for (const auto& c : rep.components) {
    text << c.name << " [" << c.provenance << "]: contains J " << (c.ideal_contains_J ? "yes" : "no")
         << ", prime " << (c.prime_certified ? "yes" : "no") << " (" << c.certificate << "), dimension "
         << c.dimension << "\n  D = " << c.parametric_form << "\n";
  }
  text << "p1*p2 in J: " << (rep.product_in_J ? "yes" : "no") << "\nall verdicts: " << (rep.all_verdicts ? "pass" : "fail") << "\n";
  for (const auto& n : rep.notes) text << "note: " << n << "\n";
  if (!o.fix.empty()) {
    auto fr = sl2::fixed_param_dimension(f, fix_args(o.fix));
    j["fixed"] = to_json(fr);
    text << "fixed parameters: dimension " << fr.dimension << " (gderiv " << fr.gderiv_dimension
         << ", pipelines " << (fr.pipelines_agree ? "agree" : "DISAGREE") << "; published " << fr.claimed_dimension
         << (fr.discrepancy ? ", discrepancy" : "") << ")\n" << basis_text(fr.basis);
  } else {
    j["fixed"] = nullptr;
  }
  emit(out, o.report, j, text.str());
  return 0;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  std::optional<std::string> only;
  if (!o.only.empty()) only = o.only;
  auto rows = reproduce(only);
  emit(out, o.format, to_json(rows), rows_text(rows));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"G-derivations of Lie algebras, Groebner tools and the sl2 case study", "gderive"};
  app.require_subcommand(1);
  Options o;

  auto fmt = [&](CLI::App* c, std::string& target) {
    c->add_option("--format", target, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto* check = app.add_subcommand("check", "Validate the Jacobi identity");
  check->add_option("--algebra", o.algebra, "Algebra file or builtin name")->required();
  fmt(check, o.format);

  auto* derive = app.add_subcommand("derive", "Solve for Der_{sigma,tau}");
  derive->add_option("--algebra", o.algebra)->required();
  derive->add_option("--sigma", o.sigma)->required();
  derive->add_option("--tau", o.tau);
  derive->add_option("--kind", o.kind)->check(CLI::IsMember({"plain", "plus", "minus"}));
  derive->add_option("--gens", o.gens, "Generator matrices for the minus kind");
  derive->add_option("--scope", o.scope, "all or off-diagonal basis pairs")->check(CLI::IsMember({"all", "off-diagonal"}));
  fmt(derive, o.format);

  auto* cent = app.add_subcommand("centroid", "Solve for the centroid");
  cent->add_option("--algebra", o.algebra)->required();
  cent->add_option("--scope", o.scope)->check(CLI::IsMember({"all", "off-diagonal"}));
  fmt(cent, o.format);

  auto* quasi = app.add_subcommand("quasider", "Find a quasiderivation witness");
  quasi->add_option("--algebra", o.algebra)->required();
  quasi->add_option("--map", o.map)->required();
  fmt(quasi, o.format);

  auto* abg = app.add_subcommand("abg", "Solve for (alpha, beta, gamma)-derivations");
  abg->add_option("--algebra", o.algebra)->required();
  abg->add_option("--alpha", o.alpha)->required();
  abg->add_option("--beta", o.beta)->required();
  abg->add_option("--gamma", o.gamma)->required();
  fmt(abg, o.format);

  auto* inter = app.add_subcommand("intersect", "Intersect Der_sigma and Der_tau");
  inter->add_option("--algebra", o.algebra)->required();
  inter->add_option("--sigma", o.sigma)->required();
  inter->add_option("--tau", o.tau)->required();
  inter->add_option("--witness", o.witness, "Comma-separated vector");
  fmt(inter, o.format);

  auto* hil = app.add_subcommand("hilbert", "Graded dimensions and Hilbert series");
  hil->add_option("--algebra", o.algebra)->required();
  hil->add_option("--sigma", o.sigma)->required();
  hil->add_option("--kind", o.hilbert_kind)->check(CLI::IsMember({"plain", "plus"}));
  hil->add_option("--window", o.window)->check(CLI::PositiveNumber);
  hil->add_option("--order-bound", o.order_bound)->check(CLI::PositiveNumber);
  fmt(hil, o.format);

  auto* gro = app.add_subcommand("groebner", "Reduced lex Groebner basis");
  gro->add_option("--ideal", o.ideal)->required();
  gro->add_option("--guard", o.guard, "Cap on generated polynomials");
  fmt(gro, o.format);

  auto* mem = app.add_subcommand("member", "Ideal membership");
  mem->add_option("--ideal", o.ideal)->required();
  mem->add_option("--poly", o.poly)->required();
  mem->add_option("--guard", o.guard);
  fmt(mem, o.format);

  auto* con = app.add_subcommand("contain", "Ideal containment");
  con->add_option("--outer", o.outer)->required();
  con->add_option("--inner", o.inner)->required();
  con->add_option("--guard", o.guard);
  fmt(con, o.format);

  auto* pri = app.add_subcommand("prime-check", "Triangular primality certificate");
  pri->add_option("--ideal", o.ideal)->required();
  pri->add_option("--guard", o.guard);
  fmt(pri, o.format);

  auto* s2 = app.add_subcommand("sl2", "Decomposition of the sl2 derivation varieties");
  s2->add_option("--family", o.family)->required()->check(CLI::IsMember({"b", "c", "ab"}));
  s2->add_option("--fix", o.fix, "Fixed parameter, e.g. b=1");
  s2->add_option("--report", o.report)->check(CLI::IsMember({"json", "text"}));

  auto* rep = app.add_subcommand("reproduce", "Run the golden checks");
  rep->add_option("--only", o.only, "Single check key");
  rep->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  rep->preparse_callback([&](std::size_t) { o.format = "text"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[" << error_code_name(ErrorCode::Usage) << "] " << e.what() << "\n";
    return 2;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*derive) return cmd_derive(o, out);
    if (*cent) return cmd_centroid(o, out);
    if (*quasi) return cmd_quasider(o, out);
    if (*abg) return cmd_abg(o, out);
    if (*inter) return cmd_intersect(o, out);
    if (*hil) return cmd_hilbert(o, out);
    if (*gro) return cmd_groebner(o, out);
    if (*mem) return cmd_member(o, out);
    if (*con) return cmd_contain(o, out);
    if (*pri) return cmd_prime_check(o, out);
    if (*s2) return cmd_sl2(o, out);
    if (*rep) return cmd_reproduce(o, out);
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "] " << e.what() << "\n";
    return e.code() == ErrorCode::DegreeGuardExceeded ? 1 : 2;
  }
  return 2;
}

}  // namespace gderive
