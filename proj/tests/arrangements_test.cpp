#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "clarr/arrangement.hpp"
#include "clarr/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace clarr;
using namespace clarr::test;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kParseError;
}

Component line(long a, long b, long c) { return LineForm(a, b, c); }
Component circle_component() { return ConicForm(1, 1, -25, 0, 0, 0); }

std::size_t entry_points(const SingularPointTable& table, std::vector<std::size_t> set) {
  for (const auto& e : table.entries) {
    if (e.components == set) return e.points;
  }
  return 0;
}

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("component normalization") {
  CHECK(LineForm(-2, 0, 8) == LineForm(1, 0, -4));
  CHECK(LineForm(0, -3, 0).coefficients()[1] == 1);
  CHECK(code_of([] { LineForm(0, 0, 0); }) == ErrorCode::kDegenerateLine);
  CHECK(ConicForm(-2, -2, 50, 0, 0, 0) == ConicForm(1, 1, -25, 0, 0, 0));
  CHECK(ConicForm(1, 0, 0, 0, 0, 0).discriminant() == 0);
  CHECK(ConicForm(1, 1, -25, 0, 0, 0).is_smooth());
}

TEST_CASE("validate") {
  const Arrangement cl1 = fixture("cl1.arr");
  CHECK(cl1.validated());
  CHECK(cl1.line_count() == 6);
  CHECK(cl1.conic_count() == 1);
  CHECK(code_of([] { validate(Arrangement("x2", {ConicForm(1, 0, 0, 0, 0, 0)})); }) ==
        ErrorCode::kDegenerateConic);
  CHECK(code_of([] { validate(Arrangement("dup", {line(1, 0, -4), line(2, 0, -8)})); }) ==
        ErrorCode::kDuplicateComponent);
  CHECK(code_of([] { validate(Arrangement("empty", {})); }) == ErrorCode::kEmptyArrangement);
  CHECK(code_of([] {
          validate(Arrangement("lines", {line(1, 0, 0), line(0, 1, 0)}), ArrangementMode::kConicLine);
        }) == ErrorCode::kNotConicLine);
  CHECK_NOTHROW(validate(Arrangement("lines", {line(1, 0, 0), line(0, 1, 0)})));
}

TEST_CASE("defining_polynomial") {
  const TernaryPoly q = defining_polynomial(fixture("cl1.arr"));
  CHECK(q.degree() == 8);
  CHECK(q.is_homogeneous());
  CHECK(q == q1());
  CHECK(defining_polynomial(fixture("cl2.arr")) == q2());
  CHECK(defining_polynomial(validate(Arrangement("x", {line(1, 0, 0)}))) == X());
  CHECK(defining_polynomial(fixture("triangle.arr")) == X() * Y() * Z());
}

TEST_CASE("component_set_table examples") {
  const Arrangement cl2 = fixture("cl2.arr");
  // cl2.arr: 0 circle, 1 x+4z, 2 x, 3 x-4z, 4 y-3z, 5 y+3z, 6 3x-4y.
  const SingularPointTable table = component_set_table(cl2);
  CHECK(entry_points(table, {0, 3, 4, 6}) == 1);
  CHECK(entry_points(table, {1, 2, 3}) == 1);
  // The circle and x share a set holding both of their common points, so
  // six double points sit in five sets.
  CHECK(entry_points(table, {0, 2}) == 2);
  std::map<std::size_t, std::size_t> sets_by_size, points_by_size;
  for (const auto& e : table.entries) {
    ++sets_by_size[e.components.size()];
    points_by_size[e.components.size()] += e.points;
  }
  CHECK(sets_by_size == std::map<std::size_t, std::size_t>{{2, 5}, {3, 3}, {4, 2}});
  CHECK(points_by_size == std::map<std::size_t, std::size_t>{{2, 6}, {3, 3}, {4, 2}});

  const SingularPointTable tri = component_set_table(fixture("triangle.arr"));
  REQUIRE(tri.entries.size() == 3);
  for (const auto& e : tri.entries) {
    CHECK(e.components.size() == 2);
    CHECK(e.points == 1);
  }

  const Arrangement pencil = validate(Arrangement("pencil", {line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)}));
  const SingularPointTable p = component_set_table(pencil);
  REQUIRE(p.entries.size() == 1);
  CHECK(p.entries[0].components == std::vector<std::size_t>{0, 1, 2});
  CHECK(p.entries[0].points == 1);
}

TEST_CASE("weak_combinatorics examples") {
  const WeakCombinatorics w1 = weak_combinatorics(fixture("cl1.arr"));
  CHECK(w1.d == 6);
  CHECK(w1.k == 1);
  CHECK(w1.t_vector() == std::vector<std::size_t>{6, 3, 2});
  CHECK(w1.to_string() == "(6,1;6,3,2)");
  CHECK(weak_combinatorics(fixture("cl2.arr")) == w1);
  const WeakCombinatorics tri = weak_combinatorics(fixture("triangle.arr"));
  CHECK(tri.to_string() == "(3,0;3)");
  CHECK(weak_combinatorics(fixture("smooth_conic.arr")).to_string() == "(0,1)");
}

TEST_CASE("ordinarity_check examples") {
  const OrdinarityReport cl1 = ordinarity_check(fixture("cl1.arr"));
  CHECK(cl1.ordinary);
  CHECK(cl1.pairs.size() == 21);
  CHECK(cl1.flagged().empty());
  const OrdinarityReport tangent = ordinarity_check(fixture("circle_tangent.arr"));
  CHECK_FALSE(tangent.ordinary);
  REQUIRE(tangent.flagged().size() == 1);
  CHECK(tangent.flagged()[0].points == 1);
  CHECK(tangent.flagged()[0].bezout == 2);
  CHECK(ordinarity_check(fixture("triangle.arr")).ordinary);
}

TEST_CASE("quasi_homogeneity_check examples") {
  CHECK(quasi_homogeneity_check(component_set_table(fixture("cl1.arr"))).certified);
  CHECK(quasi_homogeneity_check(component_set_table(fixture("triangle.arr"))).certified);
  const auto five = quasi_homogeneity_check(component_set_table(fixture("five_concurrent.arr")));
  CHECK_FALSE(five.certified);
  REQUIRE(five.warnings.size() == 1);
  CHECK(five.warnings[0].components.size() == 5);
}

TEST_CASE("property: incidence identity") {
  for (const char* name : {"cl1.arr", "cl2.arr", "triangle.arr", "near_pencil.arr",
                           "circle_tangent.arr", "five_concurrent.arr"}) {
    CAPTURE(name);
    const Arrangement a = fixture(name);
    const SingularPointTable table = component_set_table(a);
    std::size_t lhs = 0;
    for (const auto& [j, tj] : table.t()) lhs += binom2(j) * tj;
    std::size_t pairs = 0, bezout = 0;
    for (const auto& [key, n] : table.pair_counts) {
      pairs += n;
      bezout += component_degree(a.components()[key.first]) *
                component_degree(a.components()[key.second]);
    }
    CHECK(lhs == pairs);
    if (ordinarity_check(a, table).ordinary) CHECK(pairs == bezout);
    for (const auto& e : table.entries) {
      CHECK(e.components.size() >= 2);
      CHECK(e.points > 0);
    }
  }
}

TEST_CASE("property: invariance under permutation and coordinate change") {
  const Arrangement cl2 = fixture("cl2.arr");
  const WeakCombinatorics base = weak_combinatorics(cl2);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Component> comps = cl2.components();
    std::shuffle(comps.begin(), comps.end(), rng);
    CHECK(weak_combinatorics(validate(Arrangement("p", comps))) == base);
  }
  CoordinateChangeStream changes(555, 3);
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(weak_combinatorics(transform(cl2, changes.next())) == base);
  }
}

TEST_CASE("oracle: inclusion-exclusion equals brute-force clustering") {
  for (const char* name : {"triangle.arr", "near_pencil.arr", "cl1.arr", "cl2.arr"}) {
    CAPTURE(name);
    const Arrangement a = fixture(name);
    const auto oracle = cluster_oracle(a);
    REQUIRE(oracle.has_value());
    const SingularPointTable table = component_set_table(a);
    CHECK(table.t() == oracle->t);
    for (const auto& e : table.entries) CHECK(oracle->sets.at(e.components) == e.points);
    CHECK(table.entries.size() == oracle->sets.size());
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const Arrangement a = random_line_arrangement(seed, n);
    CAPTURE(seed);
    const auto oracle = cluster_oracle(a);
    REQUIRE(oracle.has_value());
    CHECK(weak_combinatorics(a, seed * 17).t == oracle->t);
  }
}

TEST_CASE("rational_multiple_points") {
  const auto points = rational_multiple_points(fixture("cl1.arr"));
  const ProjectivePoint odd({Rational(-104, 37), Rational(-153, 37), 1});
  REQUIRE(points.count(odd) == 1);
  CHECK(points.at(odd) == std::vector<std::size_t>{0, 5});
  CHECK(ProjectivePoint({8, 6, 2}).to_string() == "(4:3:1)");
  CHECK(ProjectivePoint({0, -3, 0}).to_string() == "(0:1:0)");
}
