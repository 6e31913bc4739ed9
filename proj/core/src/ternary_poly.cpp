#include "clarr/ternary_poly.hpp"

#include <algorithm>

#include "clarr/error.hpp"

namespace clarr {

TernaryPoly TernaryPoly::constant(const Rational& c, MonomialOrder order) {
  return term(Monomial{}, c, order);
}

TernaryPoly TernaryPoly::variable(Var v, MonomialOrder order) {
  return term(Monomial::of(v), 1, order);
}

TernaryPoly TernaryPoly::term(const Monomial& m, const Rational& c, MonomialOrder order) {
  TernaryPoly p(order);
  if (c != 0) {
    p.terms_.push_back({m, c});
  }
  return p;
}

TernaryPoly TernaryPoly::from_terms(std::vector<Term> terms, MonomialOrder order) {
  TernaryPoly p(order);
  p.terms_ = std::move(terms);
  p.sort_and_combine();
  return p;
}

void TernaryPoly::sort_and_combine() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return order_.greater(a.monomial, b.monomial);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) {
        merged.pop_back();
      }
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) {
    merged.pop_back();
  }
  terms_ = std::move(merged);
}

TernaryPoly TernaryPoly::with_order(MonomialOrder order) const {
  if (order == order_) {
    return *this;
  }
  return from_terms(terms_, order);
}

int TernaryPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    d = std::max(d, t.monomial.degree());
  }
  return d;
}

bool TernaryPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

int TernaryPoly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    d = std::max(d, t.monomial[v]);
  }
  return d;
}

Rational TernaryPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) {
      return t.coefficient;
    }
  }
  return 0;
}

namespace {

// Merges two descending term lists, b scaled by `scale` and shifted by `shift`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& scale, const Monomial& shift,
                              const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial mb = b[j].monomial * shift;
    if (i == a.size()) {
      out.push_back({mb, scale * b[j].coefficient});
      ++j;
      continue;
    }
    const auto c = order.compare(a[i].monomial, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({mb, scale * b[j].coefficient});
      ++j;
    } else {
      Rational sum = a[i].coefficient + scale * b[j].coefficient;
      if (sum != 0) {
        out.push_back({mb, std::move(sum)});
      }
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

TernaryPoly& TernaryPoly::operator+=(const TernaryPoly& other) {
  if (other.order_ != order_) {
    return *this += other.with_order(order_);
  }
  terms_ = merge_terms(terms_, other.terms_, 1, Monomial{}, order_);
  return *this;
}

TernaryPoly& TernaryPoly::operator-=(const TernaryPoly& other) {
  if (other.order_ != order_) {
    return *this -= other.with_order(order_);
  }
  terms_ = merge_terms(terms_, other.terms_, -1, Monomial{}, order_);
  return *this;
}

TernaryPoly TernaryPoly::sub_scaled(const Rational& c, const Monomial& m,
                                    const TernaryPoly& other) const {
  if (other.order_ != order_) {
    return sub_scaled(c, m, other.with_order(order_));
  }
  TernaryPoly out(order_);
  out.terms_ = merge_terms(terms_, other.terms_, -c, m, order_);
  return out;
}

TernaryPoly TernaryPoly::mul_term(const Monomial& m, const Rational& c) const {
  TernaryPoly out(order_);
  if (c == 0) {
    return out;
  }
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back({t.monomial * m, t.coefficient * c});
  }
  return out;
}

TernaryPoly TernaryPoly::tail() const {
  TernaryPoly out(order_);
  if (terms_.size() > 1) {
    out.terms_.assign(terms_.begin() + 1, terms_.end());
  }
  return out;
}

TernaryPoly& TernaryPoly::operator*=(const TernaryPoly& other) {
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      products.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    }
  }
  terms_ = std::move(products);
  sort_and_combine();
  return *this;
}

TernaryPoly& TernaryPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.coefficient *= c;
  }
  return *this;
}

TernaryPoly TernaryPoly::operator-() const {
  TernaryPoly out = *this;
  for (auto& t : out.terms_) {
    t.coefficient = -t.coefficient;
  }
  return out;
}

TernaryPoly TernaryPoly::monic() const {
  if (is_zero()) {
    return *this;
  }
  const Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

TernaryPoly TernaryPoly::primitive() const {
  if (is_zero()) {
    return *this;
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& t : terms_) {
    coeffs.push_back(t.coefficient);
  }
  auto ints = primitive_integer_vector(coeffs);
  TernaryPoly out(order_);
  const int sign = sgn(ints.front()) < 0 ? -1 : 1;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    out.terms_.push_back({terms_[i].monomial, Rational(ints[i] * sign)});
  }
  return out;
}

bool operator==(const TernaryPoly& a, const TernaryPoly& b) {
  if (a.terms_.size() != b.terms_.size()) {
    return false;
  }
  if (a.order_ == b.order_) {
    return a.terms_ == b.terms_;
  }
  return a.terms_ == b.with_order(a.order_).terms_;
}

std::string TernaryPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& t : terms_) {
    const Rational& c = t.coefficient;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (t.monomial.is_one()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      if (mag.get_den() == 1) {
        out += mag.get_str();
      } else {
        out += '(' + mag.get_str() + ')';
      }
    }
    out += t.monomial.to_string();
  }
  return out;
}

TernaryPoly poly_product(std::span<const TernaryPoly> factors) {
  TernaryPoly out = TernaryPoly::constant(1);
  for (const auto& f : factors) {
    out *= f;
  }
  return out;
}

TernaryPoly partial_derivative(const TernaryPoly& f, Var v) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const auto i = static_cast<std::size_t>(v);
  for (const auto& t : f.terms()) {
    const int e = t.monomial.exponent(i);
    if (e == 0) {
      continue;
    }
    auto exps = t.monomial.exponents();
    exps[i] -= 1;
    terms.push_back({Monomial(exps[0], exps[1], exps[2]), t.coefficient * e});
  }
  return TernaryPoly::from_terms(std::move(terms), f.order());
}

Matrix3 identity_matrix3() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      m[i][j] = i == j ? 1 : 0;
    }
  }
  return m;
}

Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  const Rational det = determinant(m);
  if (det == 0) {
    throw Error(ErrorCode::kSingularMatrix, "matrix is not invertible");
  }
  Matrix3 inv;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // Cofactor of (j, i) for the adjugate.
      const std::size_t r0 = (j + 1) % 3;
      const std::size_t r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3;
      const std::size_t c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  }
  return inv;
}

TernaryPoly apply_linear_change(const TernaryPoly& f, const Matrix3& m) {
  if (determinant(m) == 0) {
    throw Error(ErrorCode::kSingularMatrix, "coordinate change is not invertible");
  }
  const MonomialOrder order = f.order();
  std::array<TernaryPoly, 3> forms;
  for (std::size_t i = 0; i < 3; ++i) {
    forms[i] = TernaryPoly(order);
    for (std::size_t j = 0; j < 3; ++j) {
      forms[i] += TernaryPoly::term(Monomial::of(static_cast<Var>(j)), m[i][j], order);
    }
  }
  std::array<std::vector<TernaryPoly>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    const int top = f.degree_in(static_cast<Var>(i));
    powers[i].push_back(TernaryPoly::constant(1, order));
    for (int e = 1; e <= top; ++e) {
      powers[i].push_back(powers[i].back() * forms[i]);
    }
  }
  TernaryPoly out(order);
  for (const auto& t : f.terms()) {
    TernaryPoly prod = powers[0][t.monomial.exponent(0)];
    prod *= powers[1][t.monomial.exponent(1)];
    prod *= powers[2][t.monomial.exponent(2)];
    prod *= t.coefficient;
    out += prod;
  }
  return out;
}

Rational evaluate(const TernaryPoly& f, const std::array<Rational, 3>& point) {
  Rational acc = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < 3; ++i) {
      for (int e = 0; e < t.monomial.exponent(i); ++e) {
        v *= point[i];
      }
    }
    acc += v;
  }
  return acc;
}

TernaryPoly dehomogenize(const TernaryPoly& f, Var chart) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const auto i = static_cast<std::size_t>(chart);
  for (const auto& t : f.terms()) {
    auto exps = t.monomial.exponents();
    exps[i] = 0;
    terms.push_back({Monomial(exps[0], exps[1], exps[2]), t.coefficient});
  }
  return TernaryPoly::from_terms(std::move(terms), f.order());
}

TernaryPoly homogenize(const TernaryPoly& f, Var chart) {
  const int d = f.degree();
  std::vector<Term> terms;
  terms.reserve(f.size());
  const auto i = static_cast<std::size_t>(chart);
  for (const auto& t : f.terms()) {
    auto exps = t.monomial.exponents();
    exps[i] += d - t.monomial.degree();
    terms.push_back({Monomial(exps[0], exps[1], exps[2]), t.coefficient});
  }
  return TernaryPoly::from_terms(std::move(terms), f.order());
}

}  // namespace clarr
