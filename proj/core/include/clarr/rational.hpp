#ifndef CLARR_RATIONAL_HPP
#define CLARR_RATIONAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clarr {

using Integer = mpz_class;
/// GMP rationals are kept in canonical form (reduced, positive denominator)
/// by every arithmetic operation; make_rational canonicalizes raw input.
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Scales a rational vector to a primitive integer vector (content 1). The
/// sign is kept. A zero vector maps to a zero vector.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);

/// Divides out the gcd of the entries in place. Returns false on a zero vector.
bool make_primitive(std::vector<Integer>& values);

}  // namespace clarr

#endif  // CLARR_RATIONAL_HPP
