#include <doctest.h>

#include <algorithm>
#include <random>

#include "clarr/error.hpp"
#include "clarr/groebner.hpp"
#include "support.hpp"

using namespace clarr;
using namespace clarr::test;

namespace {

Ideal ideal(std::vector<TernaryPoly> gens, MonomialOrder order = MonomialOrder::drl()) {
  for (TernaryPoly& g : gens) g = g.with_order(order);
  return Ideal(std::move(gens), order);
}

std::vector<Monomial> sorted(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), MonomialKeyLess{});
  return ms;
}

bool buchberger_holds(const Ideal& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j]), gb).is_zero()) return false;
    }
  }
  return true;
}

std::size_t count(std::vector<TernaryPoly> forms) { return count_projective_points(forms); }

}  // namespace

TEST_CASE("normal_form") {
  const TernaryPoly x = X(), y = Y();
  CHECK(normal_form(x * x, ideal({x})).is_zero());
  CHECK(normal_form(x * y + y, ideal({x})) == y);
  const TernaryPoly g = x * x + y * y - C(25);
  CHECK(normal_form(g, ideal({g})).is_zero());
  CHECK(normal_form(C(3) * g, ideal({g})).is_zero());
}

TEST_CASE("reduced_gb") {
  const TernaryPoly x = X(), y = Y();
  const auto lex = MonomialOrder::lex();

  const Ideal a = reduced_gb(ideal({x, y}, lex));
  CHECK(a.generators().size() == 2);
  CHECK(a.is_reduced_basis());

  const Ideal b = reduced_gb(ideal({x * x + y * y - C(25), x - C(4)}, lex));
  REQUIRE(b.generators().size() == 2);
  const auto& gb = b.generators();
  CHECK(std::find(gb.begin(), gb.end(), x - C(4)) != gb.end());
  CHECK(std::find(gb.begin(), gb.end(), y * y - C(9)) != gb.end());

  const Ideal c = reduced_gb(ideal({x, x + C(1)}));
  CHECK(c.is_unit());
  REQUIRE(c.generators().size() == 1);
  CHECK(c.generators()[0] == C(1));
}

TEST_CASE("property: Buchberger criterion, membership, idempotence") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const auto basis2 = monomial_basis(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<TernaryPoly> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<Term> terms;
      for (int deg = 0; deg <= 2; ++deg) {
        for (const Monomial& m : monomial_basis(deg)) {
          if (m[Var::z] == 0 && rng() % 2 == 0) terms.push_back({m, Rational(coeff(rng))});
        }
      }
      TernaryPoly g = TernaryPoly::from_terms(terms);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    for (const auto order : {MonomialOrder::drl(), MonomialOrder::lex()}) {
      const Ideal gb = reduced_gb(ideal(gens, order));
      CHECK(buchberger_holds(gb));
      for (const TernaryPoly& g : gens) CHECK(normal_form(g.with_order(order), gb).is_zero());
      const Ideal again = reduced_gb(gb);
      CHECK(again.generators() == gb.generators());
      for (const TernaryPoly& g : gb.generators()) CHECK(g.leading_coefficient() == 1);
    }
  }
}

TEST_CASE("staircase") {
  const TernaryPoly x = X(), y = Y();
  const Staircase s1 = staircase(ideal({x - C(4), y * y - C(9)}));
  CHECK(sorted(s1.monomials) == sorted({Monomial(0, 0, 0), Monomial(0, 1, 0)}));
  CHECK(staircase(ideal({x, y})).size() == 1);
  const Staircase s3 = staircase(ideal({x * x, x * y, y * y}));
  CHECK(sorted(s3.monomials) ==
        sorted({Monomial(0, 0, 0), Monomial(1, 0, 0), Monomial(0, 1, 0)}));
  try {
    staircase(ideal({x}));
    FAIL("expected NotZeroDimensional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotZeroDimensional);
  }
}

TEST_CASE("minimal_polynomial") {
  const TernaryPoly x = X(), y = Y();
  const Ideal i = ideal({x - C(4), y * y - C(9)});
  CHECK(minimal_polynomial(i, Var::y) == UniPoly({-9, 0, 1}));
  CHECK(minimal_polynomial(i, Var::x) == UniPoly({-4, 1}));
  CHECK(minimal_polynomial(ideal({x * x, y}), Var::x) == UniPoly({0, 0, 1}));
  CHECK_THROWS(minimal_polynomial(ideal({x}), Var::y));
}

TEST_CASE("zero_dim_radical") {
  const TernaryPoly x = X(), y = Y();
  const Ideal expected = reduced_gb(ideal({x, y}));
  CHECK(zero_dim_radical(ideal({x * x, y})).generators() == expected.generators());
  CHECK(zero_dim_radical(ideal({x * x, y * y})).generators() == expected.generators());
  const Ideal i = reduced_gb(ideal({x - C(4), y * y - C(9)}));
  CHECK(zero_dim_radical(i).generators() == i.generators());
  // (x - y)^2 and y^2 - y: two double points collapse to two simple ones.
  const Ideal j = ideal({(x - y) * (x - y), y * y - y});
  CHECK(staircase(j).size() == 4);
  CHECK(staircase(zero_dim_radical(j)).size() == 2);
}

TEST_CASE("count_projective_points examples") {
  const TernaryPoly x = X(), y = Y(), z = Z();
  CHECK(count({circle(), x - C(4) * z}) == 2);
  CHECK(count({circle(), x - C(5) * z}) == 1);
  CHECK(count({x - C(4) * z, x + C(4) * z}) == 1);
  CHECK(count({x, y, z}) == 0);
  // Two conics meeting only on the line at infinity.
  CHECK(count({x * y - z * z, x * y - z * z + x * z}) == 2);
  try {
    count({x * y, x * z});
    FAIL("expected CommonComponent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCommonComponent);
  }
}

TEST_CASE("property: point counts are coordinate and scale invariant, bounded by Bezout") {
  const TernaryPoly x = X(), y = Y(), z = Z();
  const std::vector<std::vector<TernaryPoly>> systems{
      {circle(), x - C(4) * z},
      {circle(), x - C(5) * z},
      {x - C(4) * z, x + C(4) * z},
      {circle(), C(6) * x + y + C(21) * z},
      {circle(), x * x - y * z},
      {circle(), x * x + C(4) * y * y - C(25) * z * z},
  };
  CoordinateChangeStream changes(2026, 3);
  for (const auto& sys : systems) {
    const std::size_t base = count_projective_points(sys);
    CHECK(base <= static_cast<std::size_t>(sys[0].degree() * sys[1].degree()));
    for (int i = 0; i < 10; ++i) {
      const Matrix3 m = changes.next();
      std::vector<TernaryPoly> moved;
      for (std::size_t k = 0; k < sys.size(); ++k) {
        moved.push_back(Rational(static_cast<long>(k) * 3 - 7, 2) * apply_linear_change(sys[k], m));
      }
      CHECK(count_projective_points(moved, {.seed = 1000u + i}) == base);
    }
  }
  // Tangent circle: strict inequality; secant: equality.
  CHECK(count({circle(), x - C(5) * z}) < 2);
  CHECK(count({circle(), x - C(3) * z}) == 2);
}
