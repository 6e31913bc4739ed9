#include "clarr/uni_poly.hpp"

#include <algorithm>

#include "clarr/error.hpp"

namespace clarr {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly UniPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational UniPoly::operator[](int i) const {
  if (i < 0 || i > degree()) {
    return 0;
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) {
    return {};
  }
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<long>(i);
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) {
    return *this;
  }
  const Rational inv = 1 / leading_coefficient();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) {
    c *= inv;
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) {
    return *this;
  }
  auto ints = primitive_integer_vector(coeffs_);
  const int sign = sgn(ints.back()) < 0 ? -1 : 1;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) {
    out.emplace_back(v * sign);
  }
  return UniPoly(std::move(out));
}

Rational UniPoly::evaluate(const Rational& u) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * u + *it;
  }
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] -= b.coeffs_[i];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) {
      continue;
    }
    const Rational mag = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
    }
    out += var;
    if (i > 1) {
      out += '^' + std::to_string(i);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divide(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "division by the zero polynomial");
  }
  if (a.degree() < b.degree()) {
    return {UniPoly{}, a};
  }
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv = 1 / b.leading_coefficient();
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    const Rational q = rem[top] * inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) {
      continue;
    }
    for (std::size_t j = 0; j < bc.size(); ++j) {
      rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "square-free part of the zero polynomial");
  }
  const UniPoly g = gcd(p, p.derivative());
  return divide(p, g).first.primitive();
}

}  // namespace clarr
