#include "support.hpp"

#include "cli/arrangement_file.hpp"

namespace clarr::test {

std::string fixture_path(const std::string& name) {
  return std::string(CLARR_FIXTURE_DIR) + "/" + name;
}

Arrangement fixture(const std::string& name) { return cli::load_arrangement(fixture_path(name)); }

TernaryPoly q1() {
  const TernaryPoly x = X(), y = Y(), z = Z();
  return circle() * (x - C(4) * z) * (x + C(4) * z) * (C(3) * x + C(4) * y) * (x + C(3) * z) *
         (C(6) * x + y + C(21) * z) * (y + C(3) * z);
}

TernaryPoly q2() {
  const TernaryPoly x = X(), y = Y(), z = Z();
  return circle() * (x + C(4) * z) * x * (x - C(4) * z) * (y - C(3) * z) * (y + C(3) * z) *
         (C(3) * x - C(4) * y);
}

QVector flatten(const SyzygyVector& v) {
  const std::size_t n = monomial_count(v.degree);
  QVector out(3 * n);
  for (std::size_t i = 0; i < 3; ++i) {
    for (const Term& t : v.components[i].terms()) out[i * n + drl_index(t.monomial)] = t.coefficient;
  }
  return out;
}

Arrangement transform(const Arrangement& arrangement, const Matrix3& m) {
  std::vector<Component> out;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    const TernaryPoly g = apply_linear_change(arrangement.form(i), m);
    auto coeffs = [&](std::vector<Monomial> ms) {
      std::vector<Rational> q;
      for (const Monomial& mono : ms) q.push_back(g.coefficient(mono));
      return primitive_integer_vector(q);
    };
    if (component_degree(arrangement.components()[i]) == 1) {
      const auto c = coeffs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
      out.emplace_back(LineForm(c[0], c[1], c[2]));
    } else {
      const auto c = coeffs({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
      out.emplace_back(ConicForm(c[0], c[1], c[2], c[3], c[4], c[5]));
    }
  }
  return validate(Arrangement(arrangement.label(), std::move(out)));
}

}  // namespace clarr::test
