#include "clarr/monomial.hpp"

#include <algorithm>

namespace clarr {

char var_name(Var v) { return "xyz"[static_cast<std::size_t>(v)]; }

std::string Monomial::to_string() const {
  if (is_one()) {
    return "1";
  }
  std::string out;
  for (Var v : kAllVars) {
    const int e = (*this)[v];
    if (e == 0) {
      continue;
    }
    out += var_name(v);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.exponent(0), b.exponent(0)), std::max(a.exponent(1), b.exponent(1)),
          std::max(a.exponent(2), b.exponent(2))};
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return {std::min(a.exponent(0), b.exponent(0)), std::min(a.exponent(1), b.exponent(1)),
          std::min(a.exponent(2), b.exponent(2))};
}

namespace {

std::strong_ordering drl_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) {
    return c;
  }
  // Equal degree: the smaller exponent in the last differing variable wins.
  for (int i = 2; i >= 0; --i) {
    if (auto c = b.exponent(i) <=> a.exponent(i); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::kDegRevLex:
      return drl_compare(a, b);
    case Kind::kLex:
      return a.exponents() <=> b.exponents();
    case Kind::kElimination: {
      int da = 0;
      int db = 0;
      for (int i = 0; i < block_; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
      }
      if (auto c = da <=> db; c != 0) {
        return c;
      }
      return drl_compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomial_basis(int degree, const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (degree < 0) {
    return out;
  }
  out.reserve(monomial_count(degree));
  for (int c = 0; c <= degree; ++c) {
    for (int b = 0; b + c <= degree; ++b) {
      out.emplace_back(degree - b - c, b, c);
    }
  }
  if (order.kind() != MonomialOrder::Kind::kDegRevLex) {
    std::sort(out.begin(), out.end(),
              [&](const Monomial& p, const Monomial& q) { return order.greater(p, q); });
  }
  return out;
}

}  // namespace clarr
