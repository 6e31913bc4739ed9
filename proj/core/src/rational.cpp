#include "clarr/rational.hpp"

#include <cctype>

#include "clarr/error.hpp"

namespace clarr {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNonHomogeneous: return "NonHomogeneous";
    case ErrorCode::kNotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::kVerificationMismatch: return "VerificationMismatch";
    case ErrorCode::kCommonComponent: return "CommonComponent";
    case ErrorCode::kDegenerateLine: return "DegenerateLine";
    case ErrorCode::kDegenerateConic: return "DegenerateConic";
    case ErrorCode::kDuplicateComponent: return "DuplicateComponent";
    case ErrorCode::kEmptyArrangement: return "EmptyArrangement";
    case ErrorCode::kNotConicLine: return "NotConicLine";
    case ErrorCode::kResolutionNotStabilized: return "ResolutionNotStabilized";
    case ErrorCode::kClassificationInconsistency: return "ClassificationInconsistency";
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDegenerateWindow: return "DegenerateWindow";
  }
  return "Unknown";
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(num));
  }
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
  const Integer d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  return make_rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

bool make_primitive(std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& v : values) {
    if (v != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) {
        return true;
      }
    }
  }
  if (g == 0) {
    return false;
  }
  for (auto& v : values) {
    if (v != 0) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
  return true;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> values) {
  Integer den = 1;
  for (const auto& v : values) {
    if (v != 0) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  std::vector<Integer> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) {
      Integer scale = den / values[i].get_den();
      out[i] = values[i].get_num() * scale;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace clarr
