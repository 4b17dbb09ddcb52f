#include "gderive/rational.hpp"

#include <cctype>

#include "gderive/error.hpp"

namespace gderive {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "E-PARSE";
    case ErrorCode::DivisionByZero: return "E-DIVISION-BY-ZERO";
    case ErrorCode::DimensionMismatch: return "E-DIMENSION-MISMATCH";
    case ErrorCode::SingularMatrix: return "E-SINGULAR-MATRIX";
    case ErrorCode::NotNilpotent: return "E-NOT-NILPOTENT";
    case ErrorCode::UnknownName: return "E-UNKNOWN-NAME";
    case ErrorCode::NotLieAlgebra: return "E-NOT-LIE-ALGEBRA";
    case ErrorCode::UnvalidatedAutomorphism: return "E-UNVALIDATED-AUTOMORPHISM";
    case ErrorCode::NotSigmaStable: return "E-NOT-SIGMA-STABLE";
    case ErrorCode::NotInSubspace: return "E-NOT-IN-SUBSPACE";
    case ErrorCode::AdNotInvertibleOnH: return "E-AD-NOT-INVERTIBLE-ON-H";
    case ErrorCode::AbelianAlgebra: return "E-ABELIAN-ALGEBRA";
    case ErrorCode::FiniteOrderInput: return "E-FINITE-ORDER-INPUT";
    case ErrorCode::NoPeriod: return "E-NO-PERIOD";
    case ErrorCode::DegreeGuardExceeded: return "E-DEGREE-GUARD";
    case ErrorCode::UnknownVariable: return "E-UNKNOWN-VARIABLE";
    case ErrorCode::ZeroParameterA: return "E-ZERO-PARAMETER-A";
    case ErrorCode::ZeroParameterB: return "E-ZERO-PARAMETER-B";
    case ErrorCode::IoError: return "E-IO";
    case ErrorCode::Usage: return "E-USAGE";
  }
  return "E-UNKNOWN";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, 1) / mpq_class(den, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw Error(ErrorCode::ParseError,
                "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0)
      throw Error(ErrorCode::ParseError,
                  "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  mpq_class r = 1 / value_;
  return Rational(r);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gderive
