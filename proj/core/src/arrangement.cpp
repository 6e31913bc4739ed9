#include "clarr/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "clarr/error.hpp"
#include "clarr/linalg.hpp"

namespace clarr {

namespace {

template <std::size_t N>
void normalize_sign_and_content(std::array<Integer, N>& coeffs,
                                const std::array<std::size_t, N>& lead_order) {
  std::vector<Integer> v(coeffs.begin(), coeffs.end());
  make_primitive(v);
  for (std::size_t idx : lead_order) {
    if (sgn(v[idx]) != 0) {
      if (sgn(v[idx]) < 0) {
        for (auto& e : v) {
          e = -e;
        }
      }
      break;
    }
  }
  std::copy(v.begin(), v.end(), coeffs.begin());
}

TernaryPoly linear_form(const Integer& a, const Integer& b, const Integer& c) {
  return TernaryPoly::from_terms({{Monomial(1, 0, 0), Rational(a)},
                                  {Monomial(0, 1, 0), Rational(b)},
                                  {Monomial(0, 0, 1), Rational(c)}});
}

}  // namespace

LineForm::LineForm(Integer a, Integer b, Integer c) : coeffs_{std::move(a), std::move(b), std::move(c)} {
  if (coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0) {
    throw Error(ErrorCode::kDegenerateLine, "line with all coefficients zero");
  }
  normalize_sign_and_content<3>(coeffs_, {0, 1, 2});
}

TernaryPoly LineForm::polynomial() const { return linear_form(coeffs_[0], coeffs_[1], coeffs_[2]); }

ConicForm::ConicForm(Integer axx, Integer ayy, Integer azz, Integer axy, Integer axz, Integer ayz)
    : coeffs_{std::move(axx), std::move(ayy), std::move(azz),
              std::move(axy), std::move(axz), std::move(ayz)} {
  // Degree-reverse-lex order of the quadratic monomials: x^2, xy, y^2, xz, yz, z^2.
  normalize_sign_and_content<6>(coeffs_, {0, 3, 1, 4, 5, 2});
}

TernaryPoly ConicForm::polynomial() const {
  return TernaryPoly::from_terms({{Monomial(2, 0, 0), Rational(coeffs_[0])},
                                  {Monomial(0, 2, 0), Rational(coeffs_[1])},
                                  {Monomial(0, 0, 2), Rational(coeffs_[2])},
                                  {Monomial(1, 1, 0), Rational(coeffs_[3])},
                                  {Monomial(1, 0, 1), Rational(coeffs_[4])},
                                  {Monomial(0, 1, 1), Rational(coeffs_[5])}});
}

Integer ConicForm::discriminant() const {
  const Integer a = 2 * coeffs_[0];
  const Integer b = 2 * coeffs_[1];
  const Integer c = 2 * coeffs_[2];
  const Integer& xy = coeffs_[3];
  const Integer& xz = coeffs_[4];
  const Integer& yz = coeffs_[5];
  return Integer(a * (b * c - yz * yz) - xy * (xy * c - yz * xz) + xz * (xy * yz - b * xz));
}

int component_degree(const Component& c) {
  return std::holds_alternative<LineForm>(c) ? 1 : 2;
}

TernaryPoly component_polynomial(const Component& c) {
  return std::visit([](const auto& form) { return form.polynomial(); }, c);
}

std::string component_record(const Component& c) {
  std::ostringstream out;
  if (const auto* line = std::get_if<LineForm>(&c)) {
    out << "line";
    for (const auto& v : line->coefficients()) {
      out << ' ' << v.get_str();
    }
  } else {
    out << "conic";
    for (const auto& v : std::get<ConicForm>(c).coefficients()) {
      out << ' ' << v.get_str();
    }
  }
  return out.str();
}

std::size_t Arrangement::line_count() const {
  return static_cast<std::size_t>(std::count_if(
      components_.begin(), components_.end(),
      [](const Component& c) { return std::holds_alternative<LineForm>(c); }));
}

std::size_t Arrangement::conic_count() const { return components_.size() - line_count(); }

int Arrangement::degree() const {
  int d = 0;
  for (const auto& c : components_) {
    d += component_degree(c);
  }
  return d;
}

std::vector<TernaryPoly> Arrangement::forms() const {
  std::vector<TernaryPoly> out;
  out.reserve(components_.size());
  for (const auto& c : components_) {
    out.push_back(component_polynomial(c));
  }
  return out;
}

Arrangement validate(Arrangement arrangement, ArrangementMode mode) {
  const auto& comps = arrangement.components();
  if (comps.empty()) {
    throw Error(ErrorCode::kEmptyArrangement, "arrangement has no components");
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (const auto* conic = std::get_if<ConicForm>(&comps[i]); conic && !conic->is_smooth()) {
      throw Error(ErrorCode::kDegenerateConic,
                  "component " + std::to_string(i) + " (" + component_record(comps[i]) +
                      ") is not a smooth conic");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (comps[i] == comps[j]) {
        throw Error(ErrorCode::kDuplicateComponent,
                    "components " + std::to_string(j) + " and " + std::to_string(i) + " (" +
                        component_record(comps[i]) + ") coincide");
      }
    }
  }
  if (mode == ArrangementMode::kConicLine && !arrangement.in_conic_line_class()) {
    throw Error(ErrorCode::kNotConicLine, "a conic-line arrangement needs at least one line and "
                                          "one conic");
  }
  arrangement.validated_ = true;
  return arrangement;
}

TernaryPoly defining_polynomial(const Arrangement& arrangement) {
  const auto forms = arrangement.forms();
  return poly_product(forms);
}

std::map<std::size_t, std::size_t> SingularPointTable::t() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& e : entries) {
    out[e.components.size()] += e.points;
  }
  return out;
}

SingularPointTable component_set_table(const Arrangement& arrangement,
                                       CoordinateChangeStream& stream) {
  const std::size_t n = arrangement.size();
  if (n > 64) {
    throw std::invalid_argument("at most 64 components are supported");
  }
  const auto forms = arrangement.forms();

  // Common-zero counts of every subset with at least one common zero. A
  // subset with no common zero has none for its supersets, so those are
  // never visited.
  std::map<std::uint64_t, std::size_t> counts;
  auto visit = [&](auto&& self, std::uint64_t mask, std::size_t last) -> void {
    for (std::size_t j = last + 1; j < n; ++j) {
      const std::uint64_t extended = mask | (std::uint64_t{1} << j);
      std::vector<TernaryPoly> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (extended & (std::uint64_t{1} << i)) {
          subset.push_back(forms[i]);
        }
      }
      const std::size_t c = count_projective_points(subset, stream);
      if (c == 0) {
        continue;
      }
      counts.emplace(extended, c);
      self(self, extended, j);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    visit(visit, std::uint64_t{1} << i, i);
  }

  SingularPointTable table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto it = counts.find((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
      table.pair_counts[{i, j}] = it == counts.end() ? 0 : it->second;
    }
  }

  // Inclusion-exclusion: points on exactly the components of S.
  for (const auto& [s, ns] : counts) {
    long long exact = 0;
    for (const auto& [t, nt] : counts) {
      if ((t & s) != s) {
        continue;
      }
      const int parity = std::popcount(t) - std::popcount(s);
      exact += (parity % 2 == 0 ? 1 : -1) * static_cast<long long>(nt);
    }
    if (exact < 0) {
      throw Error(ErrorCode::kVerificationMismatch, "negative exact point count");
    }
    if (exact == 0) {
      continue;
    }
    PointSetEntry entry;
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (std::uint64_t{1} << i)) {
        entry.components.push_back(i);
      }
    }
    entry.points = static_cast<std::size_t>(exact);
    table.entries.push_back(std::move(entry));
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const PointSetEntry& a, const PointSetEntry& b) {
              if (a.components.size() != b.components.size()) {
                return a.components.size() < b.components.size();
              }
              return a.components < b.components;
            });
  return table;
}

SingularPointTable component_set_table(const Arrangement& arrangement, std::uint64_t seed) {
  CoordinateChangeStream stream(seed);
  return component_set_table(arrangement, stream);
}

std::size_t WeakCombinatorics::t_at(std::size_t j) const {
  const auto it = t.find(j);
  return it == t.end() ? 0 : it->second;
}

std::vector<std::size_t> WeakCombinatorics::t_vector() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 2; j <= max_multiplicity(); ++j) {
    out.push_back(t_at(j));
  }
  return out;
}

std::string WeakCombinatorics::to_string() const {
  std::string out = "(" + std::to_string(d) + "," + std::to_string(k);
  const auto tv = t_vector();
  for (std::size_t i = 0; i < tv.size(); ++i) {
    out += (i == 0 ? ";" : ",") + std::to_string(tv[i]);
  }
  return out + ")";
}

WeakCombinatorics weak_combinatorics(const Arrangement& arrangement,
                                     const SingularPointTable& table) {
  WeakCombinatorics wc;
  wc.d = arrangement.line_count();
  wc.k = arrangement.conic_count();
  wc.t = table.t();
  return wc;
}

WeakCombinatorics weak_combinatorics(const Arrangement& arrangement, std::uint64_t seed) {
  return weak_combinatorics(arrangement, component_set_table(arrangement, seed));
}

std::vector<PairVerdict> OrdinarityReport::flagged() const {
  std::vector<PairVerdict> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
               [](const PairVerdict& p) { return !p.transverse(); });
  return out;
}

OrdinarityReport ordinarity_check(const Arrangement& arrangement,
                                  const SingularPointTable& table) {
  OrdinarityReport report;
  const auto& comps = arrangement.components();
  for (const auto& [pair, points] : table.pair_counts) {
    PairVerdict v;
    v.first = pair.first;
    v.second = pair.second;
    v.points = points;
    v.bezout = static_cast<std::size_t>(component_degree(comps[pair.first]) *
                                        component_degree(comps[pair.second]));
    report.ordinary = report.ordinary && v.transverse();
    report.pairs.push_back(v);
  }
  return report;
}

OrdinarityReport ordinarity_check(const Arrangement& arrangement, std::uint64_t seed) {
  const auto forms = arrangement.forms();
  CoordinateChangeStream stream(seed);
  SingularPointTable pairs_only;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      const std::array<TernaryPoly, 2> pair{forms[i], forms[j]};
      pairs_only.pair_counts[{i, j}] = count_projective_points(pair, stream);
    }
  }
  return ordinarity_check(arrangement, pairs_only);
}

QuasiHomogeneityReport quasi_homogeneity_check(const SingularPointTable& table) {
  QuasiHomogeneityReport report;
  for (const auto& e : table.entries) {
    if (e.components.size() >= 5) {
      report.certified = false;
      report.warnings.push_back(e);
    }
  }
  if (report.certified) {
    report.message = "all multiple points have multiplicity at most 4";
  } else {
    std::ostringstream out;
    out << "not automatically quasi-homogeneous:";
    for (const auto& w : report.warnings) {
      out << ' ' << w.points << " point(s) of multiplicity " << w.components.size();
    }
    report.message = out.str();
  }
  return report;
}

ProjectivePoint::ProjectivePoint(std::array<Rational, 3> coords) : coords_(std::move(coords)) {
  for (std::size_t i = 3; i-- > 0;) {
    if (coords_[i] != 0) {
      const Rational scale = coords_[i];
      for (auto& c : coords_) {
        c /= scale;
      }
      return;
    }
  }
  throw std::invalid_argument("(0:0:0) is not a projective point");
}

std::string ProjectivePoint::to_string() const {
  return "(" + coords_[0].get_str() + ":" + coords_[1].get_str() + ":" + coords_[2].get_str() +
         ")";
}

namespace {

std::array<Rational, 3> cross(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  return {Rational(a[1] * b[2] - a[2] * b[1]), Rational(a[2] * b[0] - a[0] * b[2]),
          Rational(a[0] * b[1] - a[1] * b[0])};
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) {
    return false;
  }
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  root = make_rational(sqrt(num), sqrt(den));
  return true;
}

// Rational points of a line on a conic.
std::vector<ProjectivePoint> line_conic_points(const LineForm& line, const TernaryPoly& conic) {
  const auto& c = line.coefficients();
  QMatrix m{{Rational(c[0]), Rational(c[1]), Rational(c[2])}};
  const auto basis = kernel_basis(m);
  const std::array<Rational, 3> p{basis[0][0], basis[0][1], basis[0][2]};
  const std::array<Rational, 3> q{basis[1][0], basis[1][1], basis[1][2]};
  const std::array<Rational, 3> sum{p[0] + q[0], p[1] + q[1], p[2] + q[2]};
  const Rational a = evaluate(conic, p);
  const Rational cc = evaluate(conic, q);
  const Rational b = evaluate(conic, sum) - a - cc;
  // a l^2 + b l m + cc m^2 = 0 on the point l p + m q.
  std::vector<std::pair<Rational, Rational>> roots;
  if (a == 0) {
    roots.emplace_back(1, 0);
    if (b != 0) {
      roots.emplace_back(-cc, b);
    }
  } else {
    Rational root;
    if (!rational_sqrt(b * b - 4 * a * cc, root)) {
      return {};
    }
    roots.emplace_back((-b + root) / (2 * a), 1);
    roots.emplace_back((-b - root) / (2 * a), 1);
  }
  std::vector<ProjectivePoint> out;
  for (const auto& [l, mu] : roots) {
    out.emplace_back(std::array<Rational, 3>{l * p[0] + mu * q[0], l * p[1] + mu * q[1],
                                             l * p[2] + mu * q[2]});
  }
  return out;
}

}  // namespace

std::map<ProjectivePoint, std::vector<std::size_t>> rational_multiple_points(
    const Arrangement& arrangement) {
  const auto& comps = arrangement.components();
  const auto forms = arrangement.forms();
  std::vector<ProjectivePoint> candidates;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto* li = std::get_if<LineForm>(&comps[i]);
    if (li == nullptr) {
      continue;
    }
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j == i) {
        continue;
      }
      if (const auto* lj = std::get_if<LineForm>(&comps[j])) {
        if (j > i) {
          candidates.emplace_back(cross(li->coefficients(), lj->coefficients()));
        }
      } else {
        for (auto& p : line_conic_points(*li, forms[j])) {
          candidates.push_back(std::move(p));
        }
      }
    }
  }
  std::map<ProjectivePoint, std::vector<std::size_t>> out;
  for (const auto& p : candidates) {
    if (out.contains(p)) {
      continue;
    }
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (evaluate(forms[i], p.coordinates()) == 0) {
        through.push_back(i);
      }
    }
    if (through.size() >= 2) {
      out.emplace(p, std::move(through));
    }
  }
  return out;
}

}  // namespace clarr
