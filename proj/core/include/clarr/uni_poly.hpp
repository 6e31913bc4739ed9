#ifndef CLARR_UNI_POLY_HPP
#define CLARR_UNI_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "clarr/rational.hpp"

namespace clarr {

/// Dense univariate polynomial, coefficients in ascending degree. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly monomial(int degree, const Rational& c = 1);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading_coefficient() const { return coeffs_.back(); }
  Rational operator[](int i) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  UniPoly primitive() const;
  Rational evaluate(const Rational& u) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(char var = 'u') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws kZeroPolynomial on a zero divisor.
std::pair<UniPoly, UniPoly> divide(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);
/// p / gcd(p, p'), primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace clarr

#endif  // CLARR_UNI_POLY_HPP
