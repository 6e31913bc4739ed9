#include "clarr/analysis.hpp"

#include <map>

#include "clarr/error.hpp"

namespace clarr {

namespace {

std::vector<MultiplePointSet> attach_coordinates(const Arrangement& arrangement,
                                                 const SingularPointTable& table) {
  std::map<std::vector<std::size_t>, std::vector<ProjectivePoint>> by_set;
  for (auto& [point, through] : rational_multiple_points(arrangement)) {
    by_set[through].push_back(point);
  }
  std::vector<MultiplePointSet> out;
  for (const auto& entry : table.entries) {
    MultiplePointSet p{entry, std::nullopt};
    if (auto it = by_set.find(entry.components);
        it != by_set.end() && it->second.size() == entry.points) {
      p.coordinates = it->second;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ArrangementAnalysis analyze(const Arrangement& input, const AnalysisOptions& options) {
  ArrangementAnalysis a;
  a.arrangement = input.validated() ? input : validate(input);
  a.defining_polynomial = defining_polynomial(a.arrangement);

  CoordinateChangeStream stream(options.seed);
  a.table = component_set_table(a.arrangement, stream);
  a.points = attach_coordinates(a.arrangement, a.table);
  a.combinatorics = weak_combinatorics(a.arrangement, a.table);
  a.ordinarity = ordinarity_check(a.arrangement, a.table);
  a.quasi_homogeneity = quasi_homogeneity_check(a.table);

  a.resolution = assemble_resolution(a.defining_polynomial, options.resolution);
  a.curve_class = classify(a.resolution);
  a.mdr = a.resolution.exponents.front();
  a.tjurina = global_tjurina(a.defining_polynomial);

  // The resolution's Hilbert function must stabilize at tau.
  const int far = std::max(3 * a.resolution.degree, a.resolution.shifts.empty()
                                                         ? 0
                                                         : a.resolution.shifts.back() + 3);
  if (a.resolution.hilbert_function(far) != static_cast<long long>(a.tjurina)) {
    throw Error(ErrorCode::kVerificationMismatch,
                "resolution does not predict the global Tjurina number");
  }

  if (a.ordinarity.ordinary && a.quasi_homogeneity.certified) {
    std::size_t sum = 0;
    for (const auto& [j, tj] : a.combinatorics.t) {
      sum += tj * (j - 1) * (j - 1);
    }
    if (sum != a.tjurina) {
      throw Error(ErrorCode::kVerificationMismatch,
                  "sum of t_j (j-1)^2 = " + std::to_string(sum) + " but tau = " +
                      std::to_string(a.tjurina));
    }
    a.tjurina_check = TjurinaCheck::kPassed;
  }
  return a;
}

ZieglerVerdict is_weak_ziegler_pair(const ArrangementAnalysis& a, const ArrangementAnalysis& b) {
  ZieglerVerdict v;
  v.same_combinatorics = a.combinatorics == b.combinatorics;
  v.different_mdr = a.mdr != b.mdr;
  v.is_pair = v.same_combinatorics && v.different_mdr;
  const std::string wa = a.combinatorics.to_string();
  const std::string wb = b.combinatorics.to_string();
  const std::string ma = std::to_string(a.mdr);
  const std::string mb = std::to_string(b.mdr);
  if (!v.same_combinatorics) {
    v.reason = "weak combinatorics differ: " + wa + " vs " + wb;
  } else if (!v.different_mdr) {
    v.reason = "same weak combinatorics " + wa + " and equal mdr = " + ma;
  } else {
    v.reason = "same weak combinatorics " + wa + " and mdr " + ma + " != " + mb;
  }
  return v;
}

}  // namespace clarr
