#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <variant>

namespace clarr::test {
namespace {

using Point = std::array<Rational, 3>;

Point cross(const Point& u, const Point& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Point& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

Point normalized(Point p) {
  for (int i = 2; i >= 0; --i) {
    if (p[i] != 0) {
      const Rational s = p[i];
      for (Rational& c : p) c /= s;
      return p;
    }
  }
  return p;
}

Point line_vector(const LineForm& l) {
  const auto& c = l.coefficients();
  return {Rational(c[0]), Rational(c[1]), Rational(c[2])};
}

Rational conic_value(const ConicForm& q, const Point& p) {
  const auto& a = q.coefficients();
  return Rational(a[0]) * p[0] * p[0] + Rational(a[1]) * p[1] * p[1] +
         Rational(a[2]) * p[2] * p[2] + Rational(a[3]) * p[0] * p[1] +
         Rational(a[4]) * p[0] * p[2] + Rational(a[5]) * p[1] * p[2];
}

Rational value(const Component& c, const Point& p) {
  if (const auto* l = std::get_if<LineForm>(&c)) {
    const Point v = line_vector(*l);
    return v[0] * p[0] + v[1] * p[1] + v[2] * p[2];
  }
  return conic_value(std::get<ConicForm>(c), p);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

/// Intersection of a line with a conic; nullopt if irrational.
std::optional<std::vector<Point>> line_conic(const LineForm& l, const ConicForm& q) {
  const Point v = line_vector(l);
  // Two independent points spanning the line.
  std::vector<Point> span;
  for (int i = 0; i < 3 && span.size() < 2; ++i) {
    Point e{0, 0, 0};
    e[i] = 1;
    const Point p = cross(v, e);
    if (is_zero(p)) continue;
    if (span.size() == 1 && is_zero(cross(span[0], p))) continue;
    span.push_back(p);
  }
  const Point& p = span[0];
  const Point& r = span[1];
  Point sum{p[0] + r[0], p[1] + r[1], p[2] + r[2]};
  const Rational a = conic_value(q, p);
  const Rational c = conic_value(q, r);
  const Rational b = conic_value(q, sum) - a - c;
  // a s^2 + b s t + c t^2 = 0 on the point s p + t r.
  auto at = [&](const Rational& s, const Rational& t) {
    return Point{s * p[0] + t * r[0], s * p[1] + t * r[1], s * p[2] + t * r[2]};
  };
  std::vector<Point> out;
  if (a == 0) {
    out.push_back(at(1, 0));
    if (b != 0 || c != 0) out.push_back(at(c, -b));
    return out;
  }
  const auto root = rational_sqrt(b * b - 4 * a * c);
  if (!root) return std::nullopt;
  out.push_back(at((-b + *root) / (2 * a), 1));
  out.push_back(at((-b - *root) / (2 * a), 1));
  return out;
}

}  // namespace

std::optional<ClusterOracle> cluster_oracle(const Arrangement& arrangement) {
  const auto& comps = arrangement.components();
  std::set<Point> points;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const auto* li = std::get_if<LineForm>(&comps[i]);
      const auto* lj = std::get_if<LineForm>(&comps[j]);
      if (li && lj) {
        points.insert(normalized(cross(line_vector(*li), line_vector(*lj))));
        continue;
      }
      if (!li && !lj) return std::nullopt;
      const auto found = li ? line_conic(*li, std::get<ConicForm>(comps[j]))
                            : line_conic(*lj, std::get<ConicForm>(comps[i]));
      if (!found) return std::nullopt;
      for (const Point& p : *found) points.insert(normalized(p));
    }
  }
  ClusterOracle oracle;
  for (const Point& p : points) {
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (value(comps[i], p) == 0) through.push_back(i);
    }
    ++oracle.sets[through];
    ++oracle.t[through.size()];
  }
  return oracle;
}

Arrangement random_line_arrangement(std::uint64_t seed, std::size_t n, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<Component> lines;
  while (lines.size() < n) {
    const int a = coeff(rng), b = coeff(rng), c = coeff(rng);
    if (a == 0 && b == 0 && c == 0) continue;
    Component candidate = LineForm(a, b, c);
    if (std::find(lines.begin(), lines.end(), candidate) != lines.end()) continue;
    lines.push_back(std::move(candidate));
  }
  return validate(Arrangement("random-" + std::to_string(seed), std::move(lines)));
}

}  // namespace clarr::test
