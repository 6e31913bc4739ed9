#include "clarr/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

#include "clarr/error.hpp"
#include "clarr/linalg.hpp"

namespace clarr {

Ideal::Ideal(std::vector<TernaryPoly> generators, MonomialOrder order, VarSet vars)
    : order_(order), vars_(vars) {
  for (auto& g : generators) {
    if (g.is_zero()) {
      continue;
    }
    for (Var v : kAllVars) {
      if (!vars_[static_cast<std::size_t>(v)] && g.degree_in(v) > 0) {
        throw std::invalid_argument("generator uses a variable outside the ideal's ring");
      }
    }
    gens_.push_back(g.with_order(order_));
  }
}

bool Ideal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const TernaryPoly& g) { return !g.is_zero() && g.is_constant(); });
}

TernaryPoly normal_form(const TernaryPoly& f, std::span<const TernaryPoly> divisors) {
  const MonomialOrder order = divisors.empty() ? f.order() : divisors.front().order();
  TernaryPoly p = f.with_order(order);
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Monomial lead = p.leading_monomial();
    const TernaryPoly* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      const Rational c = p.leading_coefficient() / divisor->leading_coefficient();
      p = p.sub_scaled(c, lead / divisor->leading_monomial(), *divisor);
    } else {
      remainder.push_back(p.terms().front());
      p = p.tail();
    }
  }
  return TernaryPoly::from_terms(std::move(remainder), order);
}

TernaryPoly normal_form(const TernaryPoly& f, const Ideal& basis) {
  if (basis.generators().empty()) {
    return f.with_order(basis.order());
  }
  return normal_form(f, std::span<const TernaryPoly>(basis.generators()));
}

TernaryPoly s_polynomial(const TernaryPoly& f, const TernaryPoly& g) {
  const TernaryPoly gg = g.with_order(f.order());
  const Monomial l = lcm(f.leading_monomial(), gg.leading_monomial());
  TernaryPoly a = f.mul_term(l / f.leading_monomial(), 1 / f.leading_coefficient());
  return a.sub_scaled(1 / gg.leading_coefficient(), l / gg.leading_monomial(), gg);
}

namespace {

using PairSet = std::set<std::pair<std::size_t, std::size_t>>;

std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::vector<TernaryPoly> buchberger(std::vector<TernaryPoly> basis, const MonomialOrder& order) {
  PairSet pending;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.insert({i, j});
    }
  }
  while (!pending.empty()) {
    // Normal selection: smallest lcm of leading monomials.
    auto best = pending.begin();
    Monomial best_lcm = lcm(basis[best->first].leading_monomial(),
                            basis[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const Monomial l =
          lcm(basis[it->first].leading_monomial(), basis[it->second].leading_monomial());
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    if (gcd(li, lj).is_one()) {
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !basis[k].leading_monomial().divides(best_lcm)) {
        continue;
      }
      chain = !pending.contains(ordered(i, k)) && !pending.contains(ordered(j, k));
    }
    if (chain) {
      continue;
    }

    TernaryPoly r = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) {
      continue;
    }
    r = r.monic();
    if (r.is_constant()) {
      return {r};
    }
    const std::size_t n = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k < n; ++k) {
      pending.insert({k, n});
    }
  }
  return basis;
}

}  // namespace

Ideal reduced_gb(const Ideal& ideal) {
  if (ideal.reduced_) {
    return ideal;
  }
  const MonomialOrder& order = ideal.order();
  std::vector<TernaryPoly> basis;
  for (const auto& g : ideal.generators()) {
    basis.push_back(g.monic());
  }

  Ideal out;
  out.order_ = order;
  out.vars_ = ideal.vars();
  out.reduced_ = true;
  if (basis.empty()) {
    return out;
  }
  basis = buchberger(std::move(basis), order);
  if (basis.size() == 1 && basis.front().is_constant()) {
    out.gens_ = {TernaryPoly::constant(1, order)};
    return out;
  }

  // Minimalize: keep only elements whose leading monomial is not divisible
  // by another kept element's leading monomial.
  std::sort(basis.begin(), basis.end(), [&](const TernaryPoly& a, const TernaryPoly& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<TernaryPoly> minimal;
  for (auto& g : basis) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const TernaryPoly& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) {
      minimal.push_back(std::move(g));
    }
  }

  // Inter-reduce the tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<TernaryPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) {
        others.push_back(minimal[j]);
      }
    }
    minimal[i] = normal_form(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [&](const TernaryPoly& a, const TernaryPoly& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
  out.gens_ = std::move(minimal);
  return out;
}

Staircase staircase(const Ideal& ideal) {
  const Ideal gb = reduced_gb(ideal);
  Staircase out;
  if (gb.is_unit()) {
    return out;
  }
  std::array<int, 3> bound{0, 0, 0};
  for (std::size_t v = 0; v < 3; ++v) {
    if (!gb.vars()[v]) {
      continue;
    }
    int best = -1;
    for (const auto& g : gb.generators()) {
      const Monomial& lm = g.leading_monomial();
      if (lm.degree() == lm.exponent(v) && lm.degree() > 0) {
        best = best < 0 ? lm.degree() : std::min(best, lm.degree());
      }
    }
    if (best < 0) {
      throw Error(ErrorCode::kNotZeroDimensional,
                  std::string("no pure power of ") + var_name(static_cast<Var>(v)) +
                      " among leading monomials");
    }
    bound[v] = best;
  }
  for (int a = 0; a < std::max(bound[0], 1); ++a) {
    for (int b = 0; b < std::max(bound[1], 1); ++b) {
      for (int c = 0; c < std::max(bound[2], 1); ++c) {
        const Monomial m(a, b, c);
        const bool standard =
            std::none_of(gb.generators().begin(), gb.generators().end(),
                         [&](const TernaryPoly& g) { return g.leading_monomial().divides(m); });
        if (standard) {
          out.monomials.push_back(m);
        }
      }
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& p, const Monomial& q) { return gb.order().compare(p, q) < 0; });
  return out;
}

UniPoly minimal_polynomial(const Ideal& ideal, Var var) {
  const Ideal gb = reduced_gb(ideal);
  const Staircase stairs = staircase(gb);
  if (stairs.size() == 0) {
    return UniPoly::monomial(0);
  }
  std::unordered_map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < stairs.size(); ++i) {
    index.emplace(stairs.monomials[i], i);
  }
  auto coordinates = [&](const TernaryPoly& nf) {
    QVector v(stairs.size());
    for (const auto& t : nf.terms()) {
      v[index.at(t.monomial)] = t.coefficient;
    }
    return v;
  };

  std::vector<QVector> columns;
  TernaryPoly power = normal_form(TernaryPoly::constant(1, gb.order()), gb);
  const TernaryPoly x = TernaryPoly::variable(var, gb.order());
  for (std::size_t k = 0; k <= stairs.size(); ++k) {
    columns.push_back(coordinates(power));
    QMatrix m(stairs.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t r = 0; r < stairs.size(); ++r) {
        m.at(r, c) = columns[c][r];
      }
    }
    const auto kernel = kernel_basis(m);
    if (!kernel.empty()) {
      // The first dependency: its only free column is the newest one.
      return UniPoly(kernel.front()).monic();
    }
    power = normal_form(power * x, gb);
  }
  throw Error(ErrorCode::kNotZeroDimensional, "no linear dependency among powers");
}

Ideal zero_dim_radical(const Ideal& ideal) {
  const Ideal gb = reduced_gb(ideal);
  if (gb.is_unit()) {
    return gb;
  }
  std::vector<TernaryPoly> gens = gb.generators();
  for (Var v : kAllVars) {
    if (!gb.vars()[static_cast<std::size_t>(v)]) {
      continue;
    }
    const UniPoly p = squarefree_part(minimal_polynomial(gb, v));
    std::vector<Term> terms;
    for (int i = 0; i <= p.degree(); ++i) {
      terms.push_back({Monomial::of(v, i), p[i]});
    }
    gens.push_back(TernaryPoly::from_terms(std::move(terms), gb.order()));
  }
  return reduced_gb(Ideal(std::move(gens), gb.order(), gb.vars()));
}

Matrix3 CoordinateChangeStream::next() {
  const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
  for (;;) {
    Matrix3 m;
    for (auto& row : m) {
      for (auto& e : row) {
        e = static_cast<long>(engine_() % span) - bound_;
      }
    }
    if (determinant(m) != 0) {
      return m;
    }
  }
}

namespace {

// Univariate u -> h(u, 1) of a binary form h(x, y).
UniPoly binary_to_univariate(const TernaryPoly& h) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(h.degree(), 0)) + 1);
  for (const auto& t : h.terms()) {
    coeffs[static_cast<std::size_t>(t.monomial[Var::x])] += t.coefficient;
  }
  return UniPoly(std::move(coeffs));
}

// True when the forms have a common zero on the line z = 0.
bool common_zero_at_infinity(std::span<const TernaryPoly> forms) {
  UniPoly g;
  bool all_vanish_at_x_point = true;
  for (const auto& f : forms) {
    std::vector<Term> restricted;
    for (const auto& t : f.terms()) {
      if (t.monomial[Var::z] == 0) {
        restricted.push_back(t);
      }
    }
    const TernaryPoly h = TernaryPoly::from_terms(std::move(restricted), f.order());
    if (h.is_zero()) {
      continue;
    }
    const int n = f.degree();
    if (h.coefficient(Monomial::of(Var::x, n)) != 0) {
      all_vanish_at_x_point = false;
    }
    g = gcd(g, binary_to_univariate(h));
  }
  return all_vanish_at_x_point || g.is_zero() || g.degree() > 0;
}

std::size_t count_affine_points(std::span<const TernaryPoly> forms) {
  std::vector<TernaryPoly> affine;
  affine.reserve(forms.size());
  for (const auto& f : forms) {
    affine.push_back(dehomogenize(f, Var::z));
  }
  const Ideal gb = reduced_gb(Ideal(std::move(affine), MonomialOrder::drl(), kAffineChartXY));
  if (gb.is_unit()) {
    return 0;
  }
  try {
    return staircase(zero_dim_radical(gb)).size();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotZeroDimensional) {
      throw Error(ErrorCode::kCommonComponent, "forms share a component");
    }
    throw;
  }
}

}  // namespace

std::size_t count_projective_points(std::span<const TernaryPoly> forms,
                                    CoordinateChangeStream& stream, int max_retries) {
  if (forms.size() < 2) {
    throw std::invalid_argument("point counting needs at least two forms");
  }
  for (const auto& f : forms) {
    if (f.is_zero() || !f.is_homogeneous()) {
      throw Error(ErrorCode::kNonHomogeneous, "point counting needs nonzero homogeneous forms");
    }
  }
  std::vector<std::size_t> counts;
  for (int attempt = 0; attempt < max_retries && counts.size() < 2; ++attempt) {
    const Matrix3 m = stream.next();
    std::vector<TernaryPoly> moved;
    moved.reserve(forms.size());
    for (const auto& f : forms) {
      moved.push_back(apply_linear_change(f, m));
    }
    if (common_zero_at_infinity(moved)) {
      continue;
    }
    counts.push_back(count_affine_points(moved));
  }
  if (counts.empty()) {
    throw Error(ErrorCode::kCommonComponent,
                "every coordinate change left a common zero at infinity");
  }
  if (counts.size() < 2 || counts[0] != counts[1]) {
    throw Error(ErrorCode::kVerificationMismatch,
                "independent coordinate changes gave different point counts");
  }
  return counts.front();
}

std::size_t count_projective_points(std::span<const TernaryPoly> forms,
                                    const PointCountOptions& options) {
  CoordinateChangeStream stream(options.seed);
  return count_projective_points(forms, stream, options.max_retries);
}

}  // namespace clarr
