#ifndef CLARR_TERNARY_POLY_HPP
#define CLARR_TERNARY_POLY_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "clarr/monomial.hpp"
#include "clarr/rational.hpp"

namespace clarr {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in x, y, z over the rationals.
///
/// Terms are kept strictly descending in the polynomial's own monomial order
/// and never carry a zero coefficient, so two polynomials with the same order
/// are equal iff their term vectors are equal. Binary operations between
/// polynomials with different orders produce a result in the left operand's
/// order.
class TernaryPoly {
 public:
  TernaryPoly() = default;
  explicit TernaryPoly(MonomialOrder order) : order_(order) {}

  static TernaryPoly constant(const Rational& c, MonomialOrder order = MonomialOrder::drl());
  static TernaryPoly variable(Var v, MonomialOrder order = MonomialOrder::drl());
  static TernaryPoly term(const Monomial& m, const Rational& c,
                          MonomialOrder order = MonomialOrder::drl());
  /// Combines like terms and drops zeros; input may be in any order.
  static TernaryPoly from_terms(std::vector<Term> terms,
                                MonomialOrder order = MonomialOrder::drl());

  const std::vector<Term>& terms() const { return terms_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return terms_.size(); }

  TernaryPoly with_order(MonomialOrder order) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Highest exponent of `v` over all terms.
  int degree_in(Var v) const;

  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }
  Rational coefficient(const Monomial& m) const;

  TernaryPoly& operator+=(const TernaryPoly& other);
  TernaryPoly& operator-=(const TernaryPoly& other);
  TernaryPoly& operator*=(const TernaryPoly& other);
  TernaryPoly& operator*=(const Rational& c);

  friend TernaryPoly operator+(TernaryPoly a, const TernaryPoly& b) { return a += b; }
  friend TernaryPoly operator-(TernaryPoly a, const TernaryPoly& b) { return a -= b; }
  friend TernaryPoly operator*(TernaryPoly a, const TernaryPoly& b) { return a *= b; }
  friend TernaryPoly operator*(TernaryPoly a, const Rational& c) { return a *= c; }
  friend TernaryPoly operator*(const Rational& c, TernaryPoly a) { return a *= c; }
  TernaryPoly operator-() const;

  /// this - c * m * other, the basic reduction step.
  TernaryPoly sub_scaled(const Rational& c, const Monomial& m, const TernaryPoly& other) const;
  TernaryPoly mul_term(const Monomial& m, const Rational& c) const;
  /// Everything but the leading term.
  TernaryPoly tail() const;

  /// Leading coefficient 1 (zero stays zero).
  TernaryPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  TernaryPoly primitive() const;

  /// Order-independent equality of the term sets.
  friend bool operator==(const TernaryPoly& a, const TernaryPoly& b);

  /// Renders like "x^2+y^2-25z^2"; terms descending in the polynomial's order.
  std::string to_string() const;

 private:
  void sort_and_combine();

  MonomialOrder order_ = MonomialOrder::drl();
  std::vector<Term> terms_;
};

TernaryPoly poly_product(std::span<const TernaryPoly> factors);
TernaryPoly partial_derivative(const TernaryPoly& f, Var v);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Matrix3 identity_matrix3();
Rational determinant(const Matrix3& m);
/// Throws kSingularMatrix when det(m) = 0.
Matrix3 inverse(const Matrix3& m);

/// f(M * (x, y, z)^T): each variable is replaced by the corresponding row of
/// M read as a linear form. Throws kSingularMatrix when det(M) = 0.
TernaryPoly apply_linear_change(const TernaryPoly& f, const Matrix3& m);

Rational evaluate(const TernaryPoly& f, const std::array<Rational, 3>& point);

/// Substitutes 1 for `chart`.
TernaryPoly dehomogenize(const TernaryPoly& f, Var chart);

/// Rewrites the polynomial as a homogeneous one of its own total degree,
/// using `chart` as the homogenizing variable.
TernaryPoly homogenize(const TernaryPoly& f, Var chart);

}  // namespace clarr

#endif  // CLARR_TERNARY_POLY_HPP
