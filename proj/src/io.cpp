#include "gderive/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gderive {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string, got " + j.dump());
}

std::size_t index_from_json(const Json& j, std::size_t dim, const char* field) {
  if (!j.is_number_integer() || j.get<long>() < 1 || j.get<std::size_t>() > dim)
    bad(std::string("field '") + field + "' must be an index in 1.." + std::to_string(dim));
  return j.get<std::size_t>() - 1;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  const Json& cols = field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned()) bad("rows and cols must be non-negative integers");
  const std::size_t n = rows.get<std::size_t>(), m = cols.get<std::size_t>();
  if (!entries.is_array() || entries.size() != n) bad("entries must have 'rows' rows");
  Matrix out(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    if (!entries[r].is_array() || entries[r].size() != m)
      bad("row " + std::to_string(r + 1) + " must have 'cols' entries");
    for (std::size_t c = 0; c < m; ++c) out(r, c) = rational_from_json(entries[r][c]);
  }
  return out;
}

Matrix load_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }

Json to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& b : g.brackets()) {
    Json result = Json::array();
    for (std::size_t k = 0; k < b.result.size(); ++k)
      if (!b.result[k].is_zero()) result.push_back(Json::array({b.result[k].str(), k + 1}));
    brackets.push_back(Json{{"left", b.left + 1}, {"right", b.right + 1}, {"result", result}});
  }
  return Json{{"name", g.name()}, {"dim", g.dim()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& j) {
  const Json& name = field(j, "name");
  const Json& dim = field(j, "dim");
  const Json& brackets = field(j, "brackets");
  if (!name.is_string()) bad("name must be a string");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) bad("dim must be a positive integer");
  if (!brackets.is_array()) bad("brackets must be an array");
  const std::size_t n = dim.get<std::size_t>();
  std::vector<BracketEntry> entries;
  for (const auto& b : brackets) {
    BracketEntry e;
    e.left = index_from_json(field(b, "left"), n, "left");
    e.right = index_from_json(field(b, "right"), n, "right");
    if (e.left >= e.right) bad("bracket entries need left < right");
    e.result = Vector(n);
    const Json& result = field(b, "result");
    if (!result.is_array()) bad("result must be an array of [coeff, k] pairs");
    for (const auto& term : result) {
      if (!term.is_array() || term.size() != 2) bad("result terms are [coeff, k] pairs");
      e.result[index_from_json(term[1], n, "k")] += rational_from_json(term[0]);
    }
    entries.push_back(std::move(e));
  }
  return LieAlgebra(name.get<std::string>(), n, entries);
}

LieAlgebra load_algebra(const std::string& path_or_name) {
  if (!std::filesystem::exists(path_or_name)) {
    try {
      return builtin(path_or_name);
    } catch (const Error&) {
      throw Error(ErrorCode::IoError, "no such file or builtin algebra '" + path_or_name + "'");
    }
  }
  return algebra_from_json(read_json_file(path_or_name));
}

Json to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.reduced_basis() ? *ideal.reduced_basis() : ideal.generators())
    gens.push_back(g.str());
  return Json{{"vars", ideal.ring()->names()}, {"gens", gens}};
}

Ideal ideal_from_json(const Json& j) {
  const Json& vars = field(j, "vars");
  const Json& gens = field(j, "gens");
  if (!vars.is_array() || !gens.is_array()) bad("vars and gens must be arrays");
  std::vector<std::string> names, polys;
  for (const auto& v : vars) {
    if (!v.is_string()) bad("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  for (const auto& g : gens) {
    if (!g.is_string()) bad("generators must be strings");
    polys.push_back(g.get<std::string>());
  }
  return Ideal::parse(make_ring(names), polys);
}

Ideal load_ideal(const std::string& path) { return ideal_from_json(read_json_file(path)); }

Vector vector_from_string(const std::string& text) {
  Vector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) bad("empty vector component in '" + text + "'");
    out.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (out.empty()) bad("empty vector");
  return out;
}

Json to_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const DerivationSpace& s) {
  Json out{{"kind", kind_name(s.kind)},
           {"sigma", to_json(s.sigma)},
           {"tau", to_json(s.tau)},
           {"dimension", s.dimension()},
           {"basis", to_json(s.basis)}};
  return out;
}

Json to_json(const std::vector<JacobiViolation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs)
    out.push_back(Json{{"triple", {v.i + 1, v.j + 1, v.k + 1}}, {"residual", to_json(v.residual)}});
  return out;
}

Json to_json(const IntersectionReport& r) {
  Json out{{"dim_sigma", r.dim_sigma},
           {"dim_tau", r.dim_tau},
           {"dim_intersection", r.dim_intersection},
           {"intersection_basis", to_json(r.intersection_basis)}};
  if (r.witness) {
    out["witness"] = to_json(*r.witness);
    out["witness_in_centralizer"] = *r.witness_in_centralizer;
  }
  return out;
}

Json to_json(const PrimeCertificate& c) {
  return Json{{"certified", c.certified},
              {"leading_vars", c.leading_vars},
              {"free_vars", c.free_vars},
              {"dimension", c.certified ? Json(c.free_vars.size()) : Json(nullptr)},
              {"reason", c.reason}};
}

Json to_json(const GradedDims& gd) {
  Json dims = Json::array();
  for (const auto& [k, d] : gd.dims) dims.push_back(Json{{"k", k}, {"dim", d}});
  Json out{{"sigma", to_json(gd.sigma)}, {"kind", grade_kind_name(gd.kind)}, {"window", gd.window}};
  out["finite_order"] = gd.finite_order ? Json(*gd.finite_order) : Json(nullptr);
  out["dims"] = dims;
  return out;
}

Json to_json(const RationalSeries& s) {
  auto tail = [](const std::optional<GeometricTail>& t) -> Json {
    if (!t) return nullptr;
    return Json{{"numerator", t->numerator}, {"start", t->start}, {"period", t->period}};
  };
  return Json{{"low", s.low},
              {"polynomial_part", s.polynomial_part},
              {"positive_tail", tail(s.positive_tail)},
              {"negative_tail", tail(s.negative_tail)},
              {"closed_form", s.str()},
              {"certification", s.certification}};
}

Json to_json(const sl2::DecompositionReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"name", c.name},
                         {"generators", c.generators},
                         {"provenance", c.provenance},
                         {"contains_J", c.ideal_contains_J},
                         {"prime_certified", c.prime_certified},
                         {"free_vars", c.free_vars},
                         {"dimension", c.dimension},
                         {"certificate", c.certificate},
                         {"parametric_form", c.parametric_form},
                         {"parametric_identity", c.parametric_identity}});
  return Json{{"family", sl2::family_name(r.family)},
              {"ideal_generators", r.ideal_generators},
              {"simplified_generators", r.simplified_generators},
              {"components", comps},
              {"containments",
               {{"p1_contains_J", r.components.at(0).ideal_contains_J},
                {"p2_contains_J", r.components.at(1).ideal_contains_J},
                {"J_contains_p1p2", r.product_in_J}}},
              {"x22_in_J", r.x22_in_J},
              {"all_verdicts", r.all_verdicts},
              {"notes", r.notes}};
}

Json to_json(const sl2::FixedReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v.str();
  return Json{{"params", params},
              {"sigma", to_json(r.sigma)},
              {"dimension", r.dimension},
              {"basis", to_json(r.basis)},
              {"gderiv_dimension", r.gderiv_dimension},
              {"pipelines_agree", r.pipelines_agree},
              {"claimed_dimension", r.claimed_dimension},
              {"discrepancy", r.discrepancy}};
}

std::string vector_text(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "]";
}

std::string matrix_text(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    out += (r ? ", " : "") + vector_text(Vector(row.begin(), row.end()));
  }
  return out + "]";
}

}  // namespace gderive
