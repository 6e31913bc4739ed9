#include <doctest.h>

#include "clarr/analysis.hpp"
#include "clarr/error.hpp"
#include "clarr/linalg.hpp"
#include "clarr/milnor.hpp"
#include "support.hpp"

using namespace clarr;
using namespace clarr::test;

namespace {

TernaryPoly smooth_conic() { return X() * X() + Y() * Y() + Z() * Z(); }
TernaryPoly xyz() { return X() * Y() * Z(); }

SyzygyVector vec(TernaryPoly a, TernaryPoly b, TernaryPoly c) {
  const int r = std::max({a.degree(), b.degree(), c.degree()});
  return {{std::move(a), std::move(b), std::move(c)}, r};
}

}  // namespace

TEST_CASE("jacobian") {
  const JacobianTriple j = jacobian(circle());
  CHECK(j.fx == C(2) * X());
  CHECK(j.fy == C(2) * Y());
  CHECK(j.fz == C(-50) * Z());
  const JacobianTriple t = jacobian(xyz());
  CHECK(t.fx == Y() * Z());
  CHECK(t.fy == X() * Z());
  CHECK(t.fz == X() * Y());
  const TernaryPoly q = q1();
  const JacobianTriple jq = jacobian(q);
  for (std::size_t i = 0; i < 3; ++i) CHECK(jq[i].degree() == 7);
  CHECK(X() * jq.fx + Y() * jq.fy + Z() * jq.fz == C(8) * q);
  CHECK_THROWS(jacobian(X() + C(1)));
}

TEST_CASE("ar_graded_basis") {
  const auto conic = ar_graded_basis(smooth_conic(), 1);
  CHECK(conic.size() == 3);
  const JacobianTriple jc = jacobian(smooth_conic());
  for (const auto& v : conic) CHECK(is_syzygy(v, jc));
  CHECK(ar_graded_basis(q1(), 3).empty());
  CHECK(ar_graded_basis(q2(), 3).size() == 1);
  CHECK(ar_graded_basis(smooth_conic(), 0).empty());
}

TEST_CASE("property: every basis vector is a syzygy term by term") {
  for (const TernaryPoly& f : {smooth_conic(), xyz(), circle() * X(), q2()}) {
    const JacobianTriple j = jacobian(f);
    for (int r = 0; r <= f.degree(); ++r) {
      for (const auto& v : ar_graded_basis(f, r)) {
        CHECK(v.degree == r);
        const TernaryPoly s = v.components[0] * j.fx + v.components[1] * j.fy + v.components[2] * j.fz;
        CHECK(s.terms().empty());
      }
    }
  }
}

TEST_CASE("property: Koszul relations lie in AR(f) at degree d-1") {
  for (const TernaryPoly& f : {smooth_conic(), xyz(), circle() * (X() - C(4) * Z()), q1()}) {
    const JacobianTriple j = jacobian(f);
    const int r = f.degree() - 1;
    EchelonSpan span(3 * monomial_count(r));
    for (const auto& v : ar_graded_basis(f, r)) span.insert(flatten(v));
    const TernaryPoly zero;
    CHECK(span.contains(flatten(vec(j.fy, -j.fx, zero))));
    CHECK(span.contains(flatten(vec(j.fz, zero, -j.fx))));
    CHECK(span.contains(flatten(vec(zero, j.fz, -j.fy))));
  }
}

TEST_CASE("mdr") {
  CHECK(mdr(q1()) == 4);
  CHECK(mdr(q2()) == 3);
  CHECK(mdr(smooth_conic()) == 1);
  CHECK(mdr(xyz()) == 1);
}

TEST_CASE("minimal_generators and second_syzygies") {
  const GeneratorSet g1 = minimal_generators(q1());
  CHECK(g1.degrees() == std::vector<int>{4, 4, 4});
  CHECK(second_syzygies(q1(), g1) == std::vector<int>{12});
  const GeneratorSet g2 = minimal_generators(q2());
  CHECK(g2.degrees() == std::vector<int>{3, 5, 5});
  CHECK(second_syzygies(q2(), g2) == std::vector<int>{13});
  const GeneratorSet t = minimal_generators(xyz());
  CHECK(t.degrees() == std::vector<int>{1, 1});
  CHECK(second_syzygies(xyz(), t).empty());
  const JacobianTriple j = jacobian(q2());
  for (const auto& v : g2.generators) CHECK(is_syzygy(v, j));
}

TEST_CASE("assemble_resolution and classify") {
  const Resolution r1 = assemble_resolution(q1());
  CHECK(r1.to_string() == "0 -> S(-12) -> S(-11)^3 -> S(-7)^3 -> S");
  const Resolution r2 = assemble_resolution(q2());
  CHECK(r2.to_string() == "0 -> S(-13) -> S(-12)^2 (+) S(-10) -> S(-7)^3 -> S");
  const Resolution rt = assemble_resolution(xyz());
  CHECK(rt.to_string() == "0 -> S(-3)^2 -> S(-2)^3 -> S");

  CHECK(classify(r1).kind == CurveKind::kNearlyFree);
  CHECK(classify(r2).kind == CurveKind::kNearlyFree);
  const CurveClass ct = classify(rt);
  CHECK(ct.kind == CurveKind::kFree);
  CHECK(ct.exponents == std::vector<int>{1, 1});
  CHECK(ct.name() == "free");
  CHECK(classify(r2).name() == "nearly free");

  Resolution bogus;
  bogus.degree = 5;
  bogus.exponents = {1, 1};
  try {
    classify(bogus);
    FAIL("expected ClassificationInconsistency");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kClassificationInconsistency);
  }
  Resolution four;
  four.degree = 6;
  four.exponents = {2, 3, 3, 3};
  four.shifts = {9, 9};
  CHECK(classify(four).name() == "4-syzygy");
}

TEST_CASE("property: d_1 = mdr and Hilbert consistency") {
  for (const TernaryPoly& f : {smooth_conic(), xyz(), circle() * (X() - C(5) * Z()),
                               X() * Y() * (X() + Y()) * Z(), q2()}) {
    const Resolution r = assemble_resolution(f);
    CHECK(r.exponents.front() == mdr(f));
    const int e_max = r.shifts.empty() ? 0 : r.shifts.back();
    for (int t = 0; t <= std::max(16, e_max + 3); ++t) {
      CHECK(static_cast<long long>(milnor_dimension(f, t)) == r.hilbert_function(t));
    }
  }
}

TEST_CASE("global_tjurina") {
  CHECK(global_tjurina(q1()) == 36);
  CHECK(global_tjurina(q2()) == 36);
  CHECK(global_tjurina(smooth_conic()) == 0);
  CHECK(global_tjurina(xyz()) == 3);
  // Circle plus tangent line: a single tacnode (A3).
  CHECK(global_tjurina(circle() * (X() - C(5) * Z())) == 3);
}

TEST_CASE("nearly-free identity") {
  for (const TernaryPoly& f : {q1(), q2()}) {
    const Resolution r = assemble_resolution(f);
    REQUIRE(classify(r).kind == CurveKind::kNearlyFree);
    const long long d = r.degree, d1 = r.exponents.front();
    CHECK(static_cast<long long>(global_tjurina(f)) == (d - 1) * (d - 1) - d1 * (d - d1 - 1) - 1);
  }
}

TEST_CASE("property: coordinate invariance of the resolution") {
  const std::vector<TernaryPoly> curves{xyz(), circle() * (X() - C(5) * Z()),
                                        X() * Y() * (X() + Y()) * Z()};
  for (const TernaryPoly& f : curves) {
    const Resolution base = assemble_resolution(f);
    const std::size_t tau = global_tjurina(f);
    CoordinateChangeStream changes(11, 3);
    for (int i = 0; i < 20; ++i) {
      const TernaryPoly g = apply_linear_change(f, changes.next());
      const Resolution r = assemble_resolution(g);
      CHECK(r.exponents == base.exponents);
      CHECK(r.shifts == base.shifts);
      CHECK(global_tjurina(g) == tau);
    }
  }
}

TEST_CASE("weak Ziegler verdicts") {
  const ArrangementAnalysis a1 = analyze(fixture("cl1.arr"));
  const ArrangementAnalysis a2 = analyze(fixture("cl2.arr"));
  const ArrangementAnalysis tri = analyze(fixture("triangle.arr"));
  const ZieglerVerdict yes = is_weak_ziegler_pair(a1, a2);
  CHECK(yes.is_pair);
  CHECK(yes.same_combinatorics);
  CHECK(yes.different_mdr);
  const ZieglerVerdict same = is_weak_ziegler_pair(a1, a1);
  CHECK_FALSE(same.is_pair);
  CHECK(same.same_combinatorics);
  const ZieglerVerdict differ = is_weak_ziegler_pair(a1, tri);
  CHECK_FALSE(differ.is_pair);
  CHECK_FALSE(differ.same_combinatorics);
}

TEST_CASE("analysis cross-checks") {
  const ArrangementAnalysis a = analyze(fixture("cl1.arr"));
  CHECK(a.tjurina == 36);
  CHECK(a.tjurina_check == TjurinaCheck::kPassed);
  CHECK(a.mdr == 4);
  const ArrangementAnalysis tangent = analyze(fixture("circle_tangent.arr"));
  CHECK_FALSE(tangent.ordinarity.ordinary);
  CHECK(tangent.tjurina_check == TjurinaCheck::kSkipped);
}
