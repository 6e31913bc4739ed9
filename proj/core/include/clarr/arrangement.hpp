#ifndef CLARR_ARRANGEMENT_HPP
#define CLARR_ARRANGEMENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "clarr/groebner.hpp"
#include "clarr/rational.hpp"
#include "clarr/ternary_poly.hpp"

namespace clarr {

/// a x + b y + c z, stored primitive with the first nonzero coefficient
/// positive.
class LineForm {
 public:
  /// Throws kDegenerateLine when all coefficients vanish.
  LineForm(Integer a, Integer b, Integer c);

  const std::array<Integer, 3>& coefficients() const { return coeffs_; }
  TernaryPoly polynomial() const;

  friend bool operator==(const LineForm&, const LineForm&) = default;

 private:
  std::array<Integer, 3> coeffs_;
};

/// a_xx x^2 + a_yy y^2 + a_zz z^2 + a_xy xy + a_xz xz + a_yz yz, stored
/// primitive with positive leading coefficient in degree-reverse-lex order.
class ConicForm {
 public:
  ConicForm(Integer axx, Integer ayy, Integer azz, Integer axy, Integer axz, Integer ayz);

  /// (axx, ayy, azz, axy, axz, ayz), the file-format order.
  const std::array<Integer, 6>& coefficients() const { return coeffs_; }
  TernaryPoly polynomial() const;
  /// Determinant of the doubled symmetric matrix of the quadratic form.
  Integer discriminant() const;
  bool is_smooth() const { return discriminant() != 0; }

  friend bool operator==(const ConicForm&, const ConicForm&) = default;

 private:
  std::array<Integer, 6> coeffs_;
};

using Component = std::variant<LineForm, ConicForm>;

int component_degree(const Component& c);
TernaryPoly component_polynomial(const Component& c);
/// "line a b c" or "conic axx ayy azz axy axz ayz".
std::string component_record(const Component& c);

enum class ArrangementMode {
  kAnyLinesAndConics,  ///< any non-empty mix, incl. pure line arrangements
  kConicLine,          ///< additionally d >= 1 lines and k >= 1 conics
};

class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::string label, std::vector<Component> components)
      : label_(std::move(label)), components_(std::move(components)) {}

  const std::string& label() const { return label_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  std::size_t line_count() const;
  std::size_t conic_count() const;
  int degree() const;
  TernaryPoly form(std::size_t i) const { return component_polynomial(components_[i]); }
  std::vector<TernaryPoly> forms() const;

  bool validated() const { return validated_; }
  bool in_conic_line_class() const { return line_count() >= 1 && conic_count() >= 1; }

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.label_ == b.label_ && a.components_ == b.components_;
  }

 private:
  friend Arrangement validate(Arrangement arrangement, ArrangementMode mode);

  std::string label_;
  std::vector<Component> components_;
  bool validated_ = false;
};

/// Smoothness of every conic, pairwise distinct components, non-empty.
/// Throws kDegenerateConic, kDuplicateComponent, kEmptyArrangement or
/// kNotConicLine.
Arrangement validate(Arrangement arrangement,
                     ArrangementMode mode = ArrangementMode::kAnyLinesAndConics);

TernaryPoly defining_polynomial(const Arrangement& arrangement);

/// Components meeting at exactly `points` common points that lie on no other
/// component.
struct PointSetEntry {
  std::vector<std::size_t> components;
  std::size_t points = 0;

  friend bool operator==(const PointSetEntry&, const PointSetEntry&) = default;
};

struct SingularPointTable {
  /// Ordered by set size, then lexicographically.
  std::vector<PointSetEntry> entries;
  /// Distinct intersection points of every component pair (i < j).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_counts;

  /// j -> t_j, only positive entries.
  std::map<std::size_t, std::size_t> t() const;
};

SingularPointTable component_set_table(const Arrangement& arrangement,
                                       CoordinateChangeStream& stream);
SingularPointTable component_set_table(
    const Arrangement& arrangement, std::uint64_t seed = CoordinateChangeStream::kDefaultSeed);

/// (d, k; t_2, ..., t_max): d lines, k conics, t_j points where exactly j
/// components meet.
struct WeakCombinatorics {
  std::size_t d = 0;
  std::size_t k = 0;
  std::map<std::size_t, std::size_t> t;  ///< positive entries only

  std::size_t t_at(std::size_t j) const;
  std::size_t max_multiplicity() const { return t.empty() ? 0 : t.rbegin()->first; }
  /// t_2, ..., t_max with zeros filled in.
  std::vector<std::size_t> t_vector() const;
  /// "(6,1;6,3,2)"; "(0,1)" when there are no multiple points.
  std::string to_string() const;

  friend bool operator==(const WeakCombinatorics&, const WeakCombinatorics&) = default;
};

WeakCombinatorics weak_combinatorics(const Arrangement& arrangement,
                                     const SingularPointTable& table);
WeakCombinatorics weak_combinatorics(
    const Arrangement& arrangement, std::uint64_t seed = CoordinateChangeStream::kDefaultSeed);

struct PairVerdict {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t points = 0;
  std::size_t bezout = 0;
  bool transverse() const { return points == bezout; }
};

struct OrdinarityReport {
  std::vector<PairVerdict> pairs;
  bool ordinary = true;

  std::vector<PairVerdict> flagged() const;
};

/// A pair is transverse everywhere iff it meets in deg * deg distinct points.
OrdinarityReport ordinarity_check(const Arrangement& arrangement,
                                  const SingularPointTable& table);
OrdinarityReport ordinarity_check(
    const Arrangement& arrangement, std::uint64_t seed = CoordinateChangeStream::kDefaultSeed);

struct QuasiHomogeneityReport {
  bool certified = true;
  /// Point sets of multiplicity >= 5: ordinary but not automatically
  /// quasi-homogeneous.
  std::vector<PointSetEntry> warnings;
  std::string message;
};

QuasiHomogeneityReport quasi_homogeneity_check(const SingularPointTable& table);

/// Point of the projective plane scaled so the last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::array<Rational, 3> coords);

  const std::array<Rational, 3>& coordinates() const { return coords_; }
  /// "(4:3:1)".
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::array<Rational, 3> coords_;
};

/// Rational points where some line meets another line or a conic, each with
/// the full set of components through it. Conic-conic intersections that no
/// line passes through are not found.
std::map<ProjectivePoint, std::vector<std::size_t>> rational_multiple_points(
    const Arrangement& arrangement);

}  // namespace clarr

#endif  // CLARR_ARRANGEMENT_HPP
