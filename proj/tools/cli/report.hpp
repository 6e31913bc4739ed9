#ifndef CLARR_CLI_REPORT_HPP
#define CLARR_CLI_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clarr/analysis.hpp"

namespace clarr::cli {

inline constexpr const char* kReportSchema = "clarr.report.v1";
inline constexpr const char* kCompareSchema = "clarr.compare.v1";

struct PointRow {
  std::size_t multiplicity = 0;
  std::vector<std::size_t> components;
  std::size_t count = 0;
  std::optional<std::vector<std::string>> coordinates;
};

struct FlaggedPair {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t points = 0;
  std::size_t bezout = 0;
};

/// Flat, rendering-ready view of an analysis. Both renderings are produced
/// from this one record.
struct AnalysisReport {
  std::string label;
  std::size_t d = 0;  ///< lines
  std::size_t k = 0;  ///< conics
  std::vector<std::size_t> t;  ///< t_2, t_3, ...
  std::string weak_combinatorics;
  int degree = 0;
  bool conic_line_class = false;
  std::vector<PointRow> points;
  bool ordinary = false;
  std::vector<FlaggedPair> flagged_pairs;
  bool quasi_homogeneous = false;
  std::string quasi_homogeneity_note;
  int mdr = 0;
  std::vector<int> exponents;
  std::vector<int> shifts;
  std::string resolution;
  std::string curve_class;
  std::size_t tjurina = 0;
  std::string tjurina_check;  ///< "passed" or "skipped"
};

AnalysisReport make_report(const ArrangementAnalysis& analysis);

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);

std::string render_compare_text(const AnalysisReport& a, const AnalysisReport& b,
                                const ZieglerVerdict& verdict);
std::string render_compare_json(const AnalysisReport& a, const AnalysisReport& b,
                                const ZieglerVerdict& verdict);

/// "(4,4,4)".
std::string tuple_string(const std::vector<int>& values);

}  // namespace clarr::cli

#endif  // CLARR_CLI_REPORT_HPP
