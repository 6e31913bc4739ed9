#ifndef CLARR_ANALYSIS_HPP
#define CLARR_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clarr/arrangement.hpp"
#include "clarr/milnor.hpp"

namespace clarr {

struct AnalysisOptions {
  std::uint64_t seed = CoordinateChangeStream::kDefaultSeed;
  ResolutionOptions resolution;
};

/// A multiple point set of the arrangement together with its rational
/// coordinates when every one of its points was found over the rationals.
struct MultiplePointSet {
  PointSetEntry entry;
  std::optional<std::vector<ProjectivePoint>> coordinates;
};

enum class TjurinaCheck { kPassed, kSkipped };

struct ArrangementAnalysis {
  Arrangement arrangement;
  TernaryPoly defining_polynomial;
  SingularPointTable table;
  std::vector<MultiplePointSet> points;
  WeakCombinatorics combinatorics;
  OrdinarityReport ordinarity;
  QuasiHomogeneityReport quasi_homogeneity;
  Resolution resolution;
  CurveClass curve_class;
  int mdr = 0;
  std::size_t tjurina = 0;
  /// sum_j t_j (j - 1)^2 = tau; only run for ordinary arrangements whose
  /// points all have multiplicity at most 4.
  TjurinaCheck tjurina_check = TjurinaCheck::kSkipped;
};

/// The full pipeline: combinatorics, ordinarity, quasi-homogeneity,
/// resolution, classification and Tjurina number, with the cross-checks
/// between them. Throws kVerificationMismatch when a cross-check fails.
ArrangementAnalysis analyze(const Arrangement& arrangement, const AnalysisOptions& options = {});

struct ZieglerVerdict {
  bool is_pair = false;
  bool same_combinatorics = false;
  bool different_mdr = false;
  std::string reason;
};

/// Same weak combinatorics but different mdr.
ZieglerVerdict is_weak_ziegler_pair(const ArrangementAnalysis& a, const ArrangementAnalysis& b);

}  // namespace clarr

#endif  // CLARR_ANALYSIS_HPP
