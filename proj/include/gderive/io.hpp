#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gderive/derivations.hpp"
#include "gderive/hilbert.hpp"
#include "gderive/ideal.hpp"
#include "gderive/lie_algebra.hpp"
#include "gderive/sl2.hpp"

namespace gderive {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);  // IoError, ParseError

// {"rows": n, "cols": m, "entries": [["1", "-1/2"], ...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Matrix load_matrix(const std::string& path);

// {"name", "dim", "brackets": [{"left", "right", "result": [[coeff, k], ...]}]}, 1-based.
Json to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);
// A file path, or a builtin name when no such file exists.
LieAlgebra load_algebra(const std::string& path_or_name);

// {"vars": [...], "gens": [...]}
Json to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);
Ideal load_ideal(const std::string& path);

Vector vector_from_string(const std::string& text);  // "1,0,-1/2"

Json to_json(const std::vector<Matrix>& ms);
Json to_json(const Vector& v);
Json to_json(const DerivationSpace& s);
Json to_json(const std::vector<JacobiViolation>& vs);
Json to_json(const IntersectionReport& r);
Json to_json(const PrimeCertificate& c);
Json to_json(const GradedDims& gd);
Json to_json(const RationalSeries& s);
Json to_json(const sl2::DecompositionReport& r);
Json to_json(const sl2::FixedReport& r);

// Bracketed rows, e.g. [[1, -1/2], [0, 1]].
std::string matrix_text(const Matrix& m);
std::string vector_text(const Vector& v);

}  // namespace gderive
