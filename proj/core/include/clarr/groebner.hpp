#ifndef CLARR_GROEBNER_HPP
#define CLARR_GROEBNER_HPP

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "clarr/monomial.hpp"
#include "clarr/ternary_poly.hpp"
#include "clarr/uni_poly.hpp"

namespace clarr {

/// Which of x, y, z the ideal lives in. Zero-dimensionality and staircases
/// are relative to this set; the default is the affine chart z = 1.
using VarSet = std::array<bool, 3>;
inline constexpr VarSet kAffineChartXY{true, true, false};
inline constexpr VarSet kAllXYZ{true, true, true};

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::vector<TernaryPoly> generators, MonomialOrder order = MonomialOrder::drl(),
        VarSet vars = kAffineChartXY);

  const std::vector<TernaryPoly>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const VarSet& vars() const { return vars_; }
  /// True once the generators are the reduced Groebner basis for order().
  bool is_reduced_basis() const { return reduced_; }
  bool is_unit() const;

 private:
  friend Ideal reduced_gb(const Ideal& ideal);

  std::vector<TernaryPoly> gens_;
  MonomialOrder order_ = MonomialOrder::drl();
  VarSet vars_ = kAffineChartXY;
  bool reduced_ = false;
};

/// Full remainder of multivariate division by the generators of `basis`.
TernaryPoly normal_form(const TernaryPoly& f, const Ideal& basis);
TernaryPoly normal_form(const TernaryPoly& f, std::span<const TernaryPoly> divisors);

/// Buchberger with the product and chain criteria and normal pair
/// selection, followed by inter-reduction. Idempotent.
Ideal reduced_gb(const Ideal& ideal);

/// S-polynomial of two nonzero polynomials in the order of the first.
TernaryPoly s_polynomial(const TernaryPoly& f, const TernaryPoly& g);

struct Staircase {
  std::vector<Monomial> monomials;  ///< ascending in the ideal's order
  std::size_t size() const { return monomials.size(); }
};

/// Standard monomials of a zero-dimensional ideal. Computes the reduced
/// basis first when needed. Throws kNotZeroDimensional.
Staircase staircase(const Ideal& ideal);

/// Monic least-degree p with p(var) in the ideal.
UniPoly minimal_polynomial(const Ideal& ideal, Var var);

/// Radical of a zero-dimensional ideal by adjoining the square-free parts of
/// the per-variable minimal polynomials. Returns a reduced basis.
Ideal zero_dim_radical(const Ideal& ideal);

/// Deterministic stream of "generic" integer coordinate changes.
class CoordinateChangeStream {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2024'0001ULL;

  explicit CoordinateChangeStream(std::uint64_t seed = kDefaultSeed, int bound = 9)
      : engine_(seed), bound_(bound) {}

  /// An invertible matrix with entries in [-bound, bound].
  Matrix3 next();

 private:
  std::mt19937_64 engine_;
  int bound_;
};

struct PointCountOptions {
  std::uint64_t seed = CoordinateChangeStream::kDefaultSeed;
  int max_retries = 32;
};

/// Counts the distinct common zeros in the projective plane over the
/// algebraic closure of a set of homogeneous forms. Two independent generic
/// coordinate changes must agree (kVerificationMismatch otherwise); forms
/// sharing a component raise kCommonComponent.
std::size_t count_projective_points(std::span<const TernaryPoly> forms,
                                    const PointCountOptions& options = {});

/// Stateful variant that draws coordinate changes from a caller-owned stream,
/// so repeated queries in one analysis use distinct changes.
std::size_t count_projective_points(std::span<const TernaryPoly> forms,
                                    CoordinateChangeStream& stream, int max_retries = 32);

}  // namespace clarr

#endif  // CLARR_GROEBNER_HPP
