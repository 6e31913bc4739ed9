#ifndef CLARR_MONOMIAL_HPP
#define CLARR_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace clarr {

enum class Var : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kAllVars{Var::x, Var::y, Var::z};

char var_name(Var v);

/// x^a y^b z^c.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr Monomial(int a, int b, int c) : exps_{a, b, c} {}

  static constexpr Monomial of(Var v, int power = 1) {
    Monomial m;
    m.exps_[static_cast<std::size_t>(v)] = power;
    return m;
  }

  constexpr int operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  constexpr int exponent(std::size_t i) const { return exps_[i]; }
  constexpr const std::array<int, 3>& exponents() const { return exps_; }

  constexpr int degree() const { return exps_[0] + exps_[1] + exps_[2]; }
  constexpr bool is_one() const { return degree() == 0; }

  constexpr bool divides(const Monomial& other) const {
    return exps_[0] <= other.exps_[0] && exps_[1] <= other.exps_[1] && exps_[2] <= other.exps_[2];
  }

  constexpr Monomial operator*(const Monomial& other) const {
    return {exps_[0] + other.exps_[0], exps_[1] + other.exps_[1], exps_[2] + other.exps_[2]};
  }

  /// Exact quotient; caller guarantees divisor.divides(*this).
  constexpr Monomial operator/(const Monomial& divisor) const {
    return {exps_[0] - divisor.exps_[0], exps_[1] - divisor.exps_[1],
            exps_[2] - divisor.exps_[2]};
  }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::array<int, 3> exps_{0, 0, 0};
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Structural (exponent-lexicographic) ordering used only for keyed
/// containers; unrelated to any MonomialOrder.
struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() < b.exponents();
  }
};

class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { kDegRevLex, kLex, kElimination };

  constexpr MonomialOrder() = default;

  static constexpr MonomialOrder drl() { return MonomialOrder(Kind::kDegRevLex, 0); }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  /// Eliminates the first `block` variables: compares their total degree,
  /// then breaks ties by degree-reverse-lexicographic.
  static constexpr MonomialOrder elimination(int block) {
    return MonomialOrder(Kind::kElimination, block);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr int block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::kDegRevLex;
  int block_ = 0;
};

/// All monomials of total degree `degree`, descending in `order`.
std::vector<Monomial> monomial_basis(int degree, const MonomialOrder& order = MonomialOrder::drl());

/// Number of monomials of total degree `degree` in three variables; 0 for
/// negative degrees.
constexpr std::size_t monomial_count(int degree) {
  return degree < 0 ? 0 : static_cast<std::size_t>(degree + 2) * (degree + 1) / 2;
}

/// Position of a monomial inside monomial_basis(m.degree(), drl()).
constexpr std::size_t drl_index(const Monomial& m) {
  const int r = m.degree();
  const int c = m.exponent(2);
  const int b = m.exponent(1);
  return static_cast<std::size_t>(c * (r + 1) - c * (c - 1) / 2 + b);
}

}  // namespace clarr

template <>
struct std::hash<clarr::Monomial> {
  std::size_t operator()(const clarr::Monomial& m) const noexcept {
    return (static_cast<std::size_t>(m.exponent(0)) * 1315423911u) ^
           (static_cast<std::size_t>(m.exponent(1)) * 2654435761u) ^
           static_cast<std::size_t>(m.exponent(2));
  }
};

#endif  // CLARR_MONOMIAL_HPP
