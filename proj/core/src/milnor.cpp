#include "clarr/milnor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "clarr/error.hpp"
#include "clarr/linalg.hpp"

namespace clarr {

JacobianTriple jacobian(const TernaryPoly& f) {
  if (f.is_zero() || !f.is_homogeneous()) {
    throw Error(ErrorCode::kNonHomogeneous, "Jacobian triple needs a nonzero homogeneous form");
  }
  if (f.degree() < 1) {
    throw Error(ErrorCode::kUnsupportedDegree, "Jacobian triple of a constant");
  }
  const TernaryPoly g = f.with_order(MonomialOrder::drl());
  return {partial_derivative(g, Var::x), partial_derivative(g, Var::y),
          partial_derivative(g, Var::z)};
}

bool is_syzygy(const SyzygyVector& v, const JacobianTriple& jac) {
  TernaryPoly sum = v.components[0] * jac.fx;
  sum += v.components[1] * jac.fy;
  sum += v.components[2] * jac.fz;
  return sum.is_zero();
}

long long monomials_up_to(int s) { return static_cast<long long>(monomial_count(s)); }

std::vector<int> GeneratorSet::degrees() const {
  std::vector<int> out;
  out.reserve(generators.size());
  for (const auto& g : generators) {
    out.push_back(g.degree);
  }
  return out;
}

namespace {

void require_curve(const TernaryPoly& f) {
  if (f.is_zero() || !f.is_homogeneous()) {
    throw Error(ErrorCode::kNonHomogeneous, "expected a nonzero homogeneous form");
  }
  if (f.degree() < 2) {
    throw Error(ErrorCode::kUnsupportedDegree, "syzygy computations need degree at least 2");
  }
}

// Coordinates of mu * g in (S_r)^3, slot-major, drl positions inside a slot.
QVector syzygy_coordinates(const SyzygyVector& g, const Monomial& mu, int r) {
  const std::size_t n = monomial_count(r);
  QVector v(3 * n);
  for (std::size_t s = 0; s < 3; ++s) {
    for (const auto& t : g.components[s].terms()) {
      v[s * n + drl_index(t.monomial * mu)] = t.coefficient;
    }
  }
  return v;
}

SyzygyVector syzygy_from_coordinates(const QVector& v, int r) {
  const auto basis = monomial_basis(r);
  const std::size_t n = basis.size();
  SyzygyVector out;
  out.degree = r;
  for (std::size_t s = 0; s < 3; ++s) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[s * n + j]) != 0) {
        terms.push_back({basis[j], v[s * n + j]});
      }
    }
    out.components[s] = TernaryPoly::from_terms(std::move(terms));
  }
  return out;
}

/// A relation sum_i c_i g_i = 0 among generators, homogeneous of degree
/// `degree` in the S^3 grading; c_i has degree `degree - d_i`.
struct Relation {
  std::vector<TernaryPoly> coefficients;
  int degree = 0;
};

class SyzygyEngine {
 public:
  SyzygyEngine(const TernaryPoly& f, const ResolutionOptions& options)
      : f_(f.with_order(MonomialOrder::drl())), d_(f.degree()), jac_(jacobian(f_)) {
    cap_ = options.max_degree > 0 ? options.max_degree : 3 * d_;
  }

  int curve_degree() const { return d_; }

  QMatrix jacobian_map(int r) const {
    const auto basis = monomial_basis(r);
    const std::size_t n = basis.size();
    QMatrix a(monomial_count(r + d_ - 1), 3 * n);
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& t : jac_[s].terms()) {
          a.at(drl_index(t.monomial * basis[j]), s * n + j) += t.coefficient;
        }
      }
    }
    return a;
  }

  std::size_t ar_dimension(int r) const {
    if (r < 0) {
      return 0;
    }
    const QMatrix a = jacobian_map(r);
    EchelonSpan span(a.rows());
    // Column rank: insert the columns.
    for (std::size_t c = 0; c < a.cols(); ++c) {
      QVector col(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        col[i] = a.at(i, c);
      }
      span.insert(col);
    }
    return a.cols() - span.rank();
  }

  std::vector<SyzygyVector> ar_basis(int r) const {
    std::vector<SyzygyVector> out;
    if (r < 0) {
      return out;
    }
    for (const auto& v : kernel_basis(jacobian_map(r))) {
      out.push_back(syzygy_from_coordinates(v, r));
    }
    return out;
  }

  std::size_t milnor_dim(int t) {
    if (t < 0) {
      return 0;
    }
    if (auto it = milnor_cache_.find(t); it != milnor_cache_.end()) {
      return it->second;
    }
    const std::size_t n = monomial_count(t);
    std::size_t dim = n;
    if (t >= d_ - 1) {
      EchelonSpan span(n);
      for (const auto& mu : monomial_basis(t - d_ + 1)) {
        for (std::size_t s = 0; s < 3; ++s) {
          QVector v(n);
          for (const auto& term : jac_[s].terms()) {
            v[drl_index(term.monomial * mu)] = term.coefficient;
          }
          span.insert(v);
        }
      }
      dim = n - span.rank();
    }
    milnor_cache_.emplace(t, dim);
    return dim;
  }

  std::size_t tjurina() {
    const std::size_t a = milnor_dim(3 * d_ - 5);
    const std::size_t b = milnor_dim(3 * d_ - 4);
    if (a != b) {
      throw Error(ErrorCode::kResolutionNotStabilized,
                  "dim M(f)_t differs at t = 3d-5 and t = 3d-4; is the curve reduced?");
    }
    return a;
  }

  /// Actual dim M(f)_t; constant beyond the stabilization probes.
  std::size_t milnor_dim_stable(int t) {
    return t <= 3 * d_ - 4 ? milnor_dim(t) : tjurina();
  }

  void add_generators(int r) {
    const auto kernel = ar_basis(r);
    if (kernel.empty()) {
      return;
    }
    EchelonSpan span(3 * monomial_count(r));
    for (const auto& g : gens_.generators) {
      for (const auto& mu : monomial_basis(r - g.degree)) {
        span.insert(syzygy_coordinates(g, mu, r));
      }
    }
    for (const auto& k : kernel) {
      if (span.insert(syzygy_coordinates(k, Monomial{}, r))) {
        gens_.generators.push_back(k);
      }
    }
  }

  void add_relations(int rho) {
    const auto& gens = gens_.generators;
    std::vector<std::size_t> offsets;
    std::size_t cols = 0;
    for (const auto& g : gens) {
      offsets.push_back(cols);
      cols += monomial_count(rho - g.degree);
    }
    if (cols == 0) {
      return;
    }
    const std::size_t n = monomial_count(rho);
    QMatrix a(3 * n, cols);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto basis = monomial_basis(rho - gens[i].degree);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t s = 0; s < 3; ++s) {
          for (const auto& t : gens[i].components[s].terms()) {
            a.at(s * n + drl_index(t.monomial * basis[j]), offsets[i] + j) = t.coefficient;
          }
        }
      }
    }
    const auto kernel = kernel_basis(a);
    if (kernel.empty()) {
      return;
    }
    EchelonSpan span(cols);
    for (const auto& rel : relations_) {
      for (const auto& nu : monomial_basis(rho - rel.degree)) {
        QVector v(cols);
        for (std::size_t i = 0; i < rel.coefficients.size(); ++i) {
          for (const auto& t : rel.coefficients[i].terms()) {
            v[offsets[i] + drl_index(t.monomial * nu)] = t.coefficient;
          }
        }
        span.insert(v);
      }
    }
    for (const auto& k : kernel) {
      if (!span.insert(k)) {
        continue;
      }
      Relation rel;
      rel.degree = rho;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto basis = monomial_basis(rho - gens[i].degree);
        std::vector<Term> terms;
        for (std::size_t j = 0; j < basis.size(); ++j) {
          if (sgn(k[offsets[i] + j]) != 0) {
            terms.push_back({basis[j], k[offsets[i] + j]});
          }
        }
        rel.coefficients.push_back(TernaryPoly::from_terms(std::move(terms)));
      }
      relations_.push_back(std::move(rel));
    }
  }

  Resolution candidate() const {
    Resolution res;
    res.degree = d_;
    res.exponents = gens_.degrees();
    for (const auto& rel : relations_) {
      res.shifts.push_back(rel.degree + d_ - 1);
    }
    std::sort(res.exponents.begin(), res.exponents.end());
    std::sort(res.shifts.begin(), res.shifts.end());
    return res;
  }

  /// Compares the candidate's predicted Hilbert function with the direct one
  /// over a range long enough for both to have become polynomial.
  bool hilbert_consistent(const Resolution& res) {
    int last = std::max(3 * d_ - 4, 16);
    if (!res.shifts.empty()) {
      last = std::max(last, res.shifts.back() + 3);
    }
    for (int t = 0; t <= last; ++t) {
      if (res.hilbert_function(t) != static_cast<long long>(milnor_dim_stable(t))) {
        return false;
      }
    }
    return true;
  }

  /// Degree-by-degree search. Generators and relations of degree R are
  /// final once R has been processed; the search stops at the first R past
  /// every found relation and past d - 1 at which the candidate matches the
  /// Hilbert function of M(f).
  Resolution run() {
    for (int r = 0; r <= cap_; ++r) {
      add_generators(r);
      add_relations(r);
      if (gens_.m() < 2 || r < d_ - 1) {
        continue;
      }
      if (!relations_.empty() && r <= relations_.back().degree) {
        continue;
      }
      Resolution res = candidate();
      if (!hilbert_consistent(res)) {
        continue;
      }
      if (relations_.size() + 2 != gens_.m()) {
        throw Error(ErrorCode::kResolutionNotStabilized,
                    "relation module is not free of rank m - 2");
      }
      return res;
    }
    throw Error(ErrorCode::kResolutionNotStabilized,
                "no certified resolution up to syzygy degree " + std::to_string(cap_));
  }

  const GeneratorSet& generators() const { return gens_; }

  /// Relation search for a fixed generator set, certified like run().
  std::vector<int> relations_for(const GeneratorSet& gens) {
    gens_ = gens;
    relations_.clear();
    const int top = gens.generators.empty() ? 0 : gens.generators.back().degree;
    for (int rho = 0; rho <= cap_; ++rho) {
      add_relations(rho);
      if (rho < std::max(top, d_ - 1)) {
        continue;
      }
      if (!relations_.empty() && rho <= relations_.back().degree) {
        continue;
      }
      Resolution res = candidate();
      if (hilbert_consistent(res)) {
        if (relations_.size() + 2 != gens_.m()) {
          throw Error(ErrorCode::kResolutionNotStabilized,
                      "relation module is not free of rank m - 2");
        }
        return res.shifts;
      }
    }
    throw Error(ErrorCode::kResolutionNotStabilized,
                "relations did not certify up to degree " + std::to_string(cap_));
  }

 private:
  TernaryPoly f_;
  int d_;
  JacobianTriple jac_;
  int cap_;
  GeneratorSet gens_;
  std::vector<Relation> relations_;
  std::map<int, std::size_t> milnor_cache_;
};

}  // namespace

std::vector<SyzygyVector> ar_graded_basis(const TernaryPoly& f, int r) {
  require_curve(f);
  return SyzygyEngine(f, {}).ar_basis(r);
}

int mdr(const TernaryPoly& f) {
  require_curve(f);
  const SyzygyEngine engine(f, {});
  for (int r = 0;; ++r) {
    if (engine.ar_dimension(r) > 0) {
      return r;
    }
  }
}

GeneratorSet minimal_generators(const TernaryPoly& f, const ResolutionOptions& options) {
  require_curve(f);
  SyzygyEngine engine(f, options);
  engine.run();
  return engine.generators();
}

std::vector<int> second_syzygies(const TernaryPoly& f, const GeneratorSet& generators,
                                 const ResolutionOptions& options) {
  require_curve(f);
  SyzygyEngine engine(f, options);
  return engine.relations_for(generators);
}

Resolution assemble_resolution(const TernaryPoly& f, const ResolutionOptions& options) {
  require_curve(f);
  SyzygyEngine engine(f, options);
  return engine.run();
}

std::size_t milnor_dimension(const TernaryPoly& f, int t) {
  require_curve(f);
  return SyzygyEngine(f, {}).milnor_dim(t);
}

std::size_t global_tjurina(const TernaryPoly& f) {
  require_curve(f);
  return SyzygyEngine(f, {}).tjurina();
}

namespace {

std::string direct_sum(std::vector<int> shifts) {
  std::sort(shifts.begin(), shifts.end(), std::greater<>());
  std::string out;
  for (std::size_t i = 0; i < shifts.size();) {
    std::size_t j = i;
    while (j < shifts.size() && shifts[j] == shifts[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += " (+) ";
    }
    out += "S(-" + std::to_string(shifts[i]) + ")";
    if (j - i > 1) {
      out += "^" + std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

}  // namespace

std::string Resolution::to_string() const {
  std::vector<int> middle;
  for (int e : exponents) {
    middle.push_back(e + degree - 1);
  }
  std::string out = "0 -> ";
  if (!shifts.empty()) {
    out += direct_sum(shifts) + " -> ";
  }
  out += direct_sum(middle) + " -> " + direct_sum({degree - 1, degree - 1, degree - 1}) + " -> S";
  return out;
}

long long Resolution::hilbert_function(int t) const {
  long long h = monomials_up_to(t) - 3 * monomials_up_to(t - degree + 1);
  for (int e : exponents) {
    h += monomials_up_to(t + 1 - degree - e);
  }
  for (int e : shifts) {
    h -= monomials_up_to(t - e);
  }
  return h;
}

std::string CurveClass::name() const {
  switch (kind) {
    case CurveKind::kFree: return "free";
    case CurveKind::kNearlyFree: return "nearly free";
    case CurveKind::kMSyzygy: return std::to_string(m) + "-syzygy";
  }
  return "unknown";
}

CurveClass classify(const Resolution& res) {
  CurveClass out;
  out.m = res.m();
  out.exponents = res.exponents;
  const auto& e = res.exponents;
  if (out.m == 2) {
    if (e[0] + e[1] != res.degree - 1) {
      throw Error(ErrorCode::kClassificationInconsistency,
                  "two generators but d_1 + d_2 != d - 1");
    }
    out.kind = CurveKind::kFree;
  } else if (out.m == 3 && e[0] + e[1] == res.degree && e[1] == e[2]) {
    out.kind = CurveKind::kNearlyFree;
  } else {
    out.kind = CurveKind::kMSyzygy;
  }
  return out;
}

}  // namespace clarr
