#include "cli/report.hpp"

#include <sstream>

namespace clarr::cli {

std::string tuple_string(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out + ")";
}

AnalysisReport make_report(const ArrangementAnalysis& a) {
  AnalysisReport r;
  r.label = a.arrangement.label();
  r.d = a.combinatorics.d;
  r.k = a.combinatorics.k;
  r.t = a.combinatorics.t_vector();
  r.weak_combinatorics = a.combinatorics.to_string();
  r.degree = a.resolution.degree;
  r.conic_line_class = a.arrangement.in_conic_line_class();
  for (const auto& p : a.points) {
    PointRow row;
    row.multiplicity = p.entry.components.size();
    row.components = p.entry.components;
    row.count = p.entry.points;
    if (p.coordinates) {
      std::vector<std::string> coords;
      for (const auto& q : *p.coordinates) {
        coords.push_back(q.to_string());
      }
      row.coordinates = std::move(coords);
    }
    r.points.push_back(std::move(row));
  }
  r.ordinary = a.ordinarity.ordinary;
  for (const auto& f : a.ordinarity.flagged()) {
    r.flagged_pairs.push_back({f.first, f.second, f.points, f.bezout});
  }
  r.quasi_homogeneous = a.quasi_homogeneity.certified;
  r.quasi_homogeneity_note = a.quasi_homogeneity.message;
  r.mdr = a.mdr;
  r.exponents = a.resolution.exponents;
  r.shifts = a.resolution.shifts;
  r.resolution = a.resolution.to_string();
  r.curve_class = a.curve_class.name();
  r.tjurina = a.tjurina;
  r.tjurina_check = a.tjurina_check == TjurinaCheck::kPassed ? "passed" : "skipped";
  return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["label"] = r.label;
  j["d"] = r.d;
  j["k"] = r.k;
  j["t"] = r.t;
  j["weak_combinatorics"] = r.weak_combinatorics;
  j["degree"] = r.degree;
  j["conic_line_class"] = r.conic_line_class;
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : r.points) {
    nlohmann::ordered_json row;
    row["multiplicity"] = p.multiplicity;
    row["components"] = p.components;
    row["count"] = p.count;
    row["coordinates"] = p.coordinates ? nlohmann::ordered_json(*p.coordinates) : nullptr;
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  j["ordinary"] = r.ordinary;
  auto flagged = nlohmann::ordered_json::array();
  for (const auto& f : r.flagged_pairs) {
    flagged.push_back({{"components", {f.first, f.second}},
                       {"points", f.points},
                       {"bezout", f.bezout}});
  }
  j["flagged_pairs"] = std::move(flagged);
  j["quasi_homogeneous"] = r.quasi_homogeneous;
  j["quasi_homogeneity_note"] = r.quasi_homogeneity_note;
  j["mdr"] = r.mdr;
  j["exponents"] = r.exponents;
  j["shifts"] = r.shifts;
  j["resolution"] = r.resolution;
  j["class"] = r.curve_class;
  j["tjurina"] = r.tjurina;
  j["tjurina_check"] = r.tjurina_check;
  return j;
}

std::string render_json(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string index_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "arrangement " << r.label << "\n";
  out << "weak combinatorics (d,k;t_2,...) = " << r.weak_combinatorics << "\n";
  out << "lines d = " << r.d << ", conics k = " << r.k << ", curve degree = " << r.degree
      << "\n";
  out << "conic-line class = " << yes_no(r.conic_line_class) << "\n";
  out << "multiple points:" << (r.points.empty() ? " none" : "") << "\n";
  for (const auto& p : r.points) {
    out << "  " << p.multiplicity << "-fold on components " << index_set(p.components) << ": "
        << p.count << (p.count == 1 ? " point" : " points");
    if (p.coordinates) {
      for (const auto& c : *p.coordinates) {
        out << " " << c;
      }
    }
    out << "\n";
  }
  out << "ordinary = " << yes_no(r.ordinary) << "\n";
  for (const auto& f : r.flagged_pairs) {
    out << "  flagged pair " << index_set({f.first, f.second}) << ": " << f.points
        << " distinct points, expected " << f.bezout << "\n";
  }
  out << "quasi-homogeneous = " << yes_no(r.quasi_homogeneous) << " ("
      << r.quasi_homogeneity_note << ")\n";
  out << "mdr = " << r.mdr << "\n";
  out << "exponents = " << tuple_string(r.exponents) << "\n";
  out << "shifts = " << tuple_string(r.shifts) << "\n";
  out << "resolution: " << r.resolution << "\n";
  out << "class: " << r.curve_class << ", exponents " << tuple_string(r.exponents) << "\n";
  out << "tau = " << r.tjurina << " (sum t_j (j-1)^2 check: " << r.tjurina_check << ")\n";
  return out.str();
}

std::string render_compare_text(const AnalysisReport& a, const AnalysisReport& b,
                                const ZieglerVerdict& v) {
  std::ostringstream out;
  out << "first:  " << a.label << "  weak combinatorics " << a.weak_combinatorics
      << "  mdr = " << a.mdr << "\n";
  out << "second: " << b.label << "  weak combinatorics " << b.weak_combinatorics
      << "  mdr = " << b.mdr << "\n";
  out << "WEAK ZIEGLER PAIR: " << yes_no(v.is_pair) << " (" << v.reason << ")\n";
  return out.str();
}

std::string render_compare_json(const AnalysisReport& a, const AnalysisReport& b,
                                const ZieglerVerdict& v) {
  nlohmann::ordered_json j;
  j["schema"] = kCompareSchema;
  j["first"] = to_json(a);
  j["second"] = to_json(b);
  j["same_combinatorics"] = v.same_combinatorics;
  j["different_mdr"] = v.different_mdr;
  j["weak_ziegler_pair"] = v.is_pair;
  j["reason"] = v.reason;
  return j.dump(2) + "\n";
}

}  // namespace clarr::cli
