#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gderive/ideal.hpp"
#include "gderive/lie_algebra.hpp"
#include "gderive/matrix.hpp"
#include "gderive/poly.hpp"

namespace gderive {

using PolyMatrix = BasicMatrix<MultiPoly>;
using Params = std::map<std::string, Rational>;

// Only variables that occur need values.
Matrix evaluate(const PolyMatrix& m, const Params& values);
PolyMatrix compose(const PolyMatrix& m, const RingPtr& target, const std::vector<MultiPoly>& images);

namespace sl2 {

enum class Family { B, C, AB };

std::string_view family_name(Family f);  // "b", "c", "ab"
Family parse_family(std::string_view text);

// D = [[a,b,0],[-2c,0,-2b],[0,c,-a]], the general derivation of sl2.
Matrix derivation_form(const Rational& a, const Rational& b, const Rational& c);

struct Classification {
  Matrix D;
  bool nilpotent = false;            // D^3 = 0
  std::array<std::size_t, 3> ranks;  // rank(D^n), n = 1..3
  bool predicted_nilpotent = false;  // (bc = 0 and a = 0) or (bc != 0 and a^2 = 4bc)
  bool agrees = false;
};

Classification classify_derivation(const Rational& a, const Rational& b, const Rational& c);

Matrix D_b(const Rational& b);
Matrix D_c(const Rational& c);
Matrix D_ab(const Rational& a, const Rational& b);  // ZeroParameterA / ZeroParameterB

// Fixed parameters by family name: b | c | a, b.
Matrix family_sigma(Family f, const Params& params);

// Ring of the symbolic family: x11..x33 then the family coordinates.
// B: y = b.  C: y = c.  AB: t = a/(2b), y = b, with sigma = exp(y N(t)).
struct SymbolicFamily {
  Family family;
  RingPtr ring;
  std::vector<std::string> coordinates;  // family coordinate names in ring
  PolyMatrix sigma;                      // entries in ring
};

SymbolicFamily symbolic_family(Family f);
// Family coordinates for fixed user parameters (e.g. a, b -> t, y).
Params coordinate_values(Family f, const Params& params);
// Ring variable for matrix entry (r, c): x_{c+1, r+1}.
std::string entry_variable(std::size_t r, std::size_t c);

struct RawGenerator {
  std::size_t i = 0, j = 0;  // 1-based basis pair the equation came from
  MultiPoly poly;            // primitive, positive leading coefficient
};

struct DerivationIdeal {
  Family family;
  RingPtr ring;
  std::vector<RawGenerator> raw;  // distinct; off-diagonal pairs first
  Ideal ideal;                    // generated by raw
  Ideal simplified;               // reduced Groebner basis
  std::vector<MultiPoly> off_diagonal() const;
};

DerivationIdeal derivation_ideal(Family f);

struct ParametricForm {
  RingPtr ring;                                    // parameter ring
  PolyMatrix D;                                    // entries in ring
  std::map<std::string, MultiPoly> family_values;  // family coordinates in ring
  std::string description;
};

// Automorphism of the ambient ring applied before the primality check:
// variable -> variable - shift, followed by the stated variable order.
struct CoordinateChange {
  std::string variable;
  std::string shift;
  std::vector<std::string> order;
};

struct Component {
  std::string name;
  Ideal ideal;
  ParametricForm form;
  std::optional<CoordinateChange> change;
  std::string provenance;
};

struct KnownComponents {
  Family family;
  Component p1;
  Component p2;
  std::vector<std::string> notes;
};

KnownComponents known_components(Family f);

// Component forms as printed in the source; used only to report that they fail.
Matrix printed_form_c(const Rational& a, const Rational& c);
Matrix printed_form_ab(const Rational& a, const Rational& b, const Rational& c);

struct ComponentReport {
  std::string name;
  std::vector<std::string> generators;
  bool ideal_contains_J = false;
  bool prime_certified = false;
  std::vector<std::string> free_vars;
  std::size_t dimension = 0;
  std::string certificate;
  std::string parametric_form;
  bool parametric_identity = false;  // all raw generators vanish identically
  std::string provenance;
};

struct DecompositionReport {
  Family family;
  std::vector<std::string> ideal_generators;
  std::vector<std::string> simplified_generators;
  std::vector<ComponentReport> components;
  bool product_in_J = false;
  bool x22_in_J = false;
  bool all_verdicts = false;
  std::vector<std::string> notes;
};

DecompositionReport verify_decomposition(Family f);

struct FixedReport {
  Family family;
  Params params;
  Matrix sigma;
  std::size_t dimension = 0;  // sl2_case pipeline: substituted ideal, linearized
  std::vector<Matrix> basis;
  std::size_t gderiv_dimension = 0;
  bool pipelines_agree = false;
  std::size_t claimed_dimension = 0;
  bool discrepancy = false;
};

FixedReport fixed_param_dimension(Family f, const Params& params);

// The published fixed-parameter dimension (4 for every family).
std::size_t claimed_fixed_dimension(Family f);

}  // namespace sl2
}  // namespace gderive
