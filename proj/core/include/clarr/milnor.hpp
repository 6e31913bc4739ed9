#ifndef CLARR_MILNOR_HPP
#define CLARR_MILNOR_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "clarr/ternary_poly.hpp"

namespace clarr {

struct JacobianTriple {
  TernaryPoly fx;
  TernaryPoly fy;
  TernaryPoly fz;

  const TernaryPoly& operator[](std::size_t i) const { return i == 0 ? fx : (i == 1 ? fy : fz); }
};

/// Throws kNonHomogeneous for non-homogeneous input and kUnsupportedDegree
/// for constants.
JacobianTriple jacobian(const TernaryPoly& f);

/// (a, b, c) homogeneous of a common degree with a fx + b fy + c fz = 0.
struct SyzygyVector {
  std::array<TernaryPoly, 3> components;
  int degree = 0;
};

bool is_syzygy(const SyzygyVector& v, const JacobianTriple& jac);

/// Canonical basis of AR(f)_r: the kernel of (a, b, c) -> a fx + b fy + c fz
/// on (S_r)^3, one vector per free column of the monomial coefficient matrix.
std::vector<SyzygyVector> ar_graded_basis(const TernaryPoly& f, int r);

/// Least r with AR(f)_r nonzero. At most deg(f) - 1.
int mdr(const TernaryPoly& f);

struct ResolutionOptions {
  /// Highest syzygy degree examined; 0 means 3 * deg(f).
  int max_degree = 0;
};

struct GeneratorSet {
  std::vector<SyzygyVector> generators;  ///< nondecreasing degree

  std::size_t m() const { return generators.size(); }
  std::vector<int> degrees() const;
};

/// Minimal homogeneous generators of AR(f), chosen degree by degree as the
/// canonical kernel basis vectors not already in the span of multiples of
/// earlier generators. Throws kResolutionNotStabilized.
GeneratorSet minimal_generators(const TernaryPoly& f, const ResolutionOptions& options = {});

/// Shifts e_1 <= ... <= e_{m-2} of the minimal relations among `generators`:
/// a relation of degree rho in the S^3 grading has shift rho + deg(f) - 1.
std::vector<int> second_syzygies(const TernaryPoly& f, const GeneratorSet& generators,
                                 const ResolutionOptions& options = {});

/// 0 -> (+) S(-e_j) -> (+) S(1-d-d_i) -> S^3(1-d) -> S for M(f) = S / J_f.
struct Resolution {
  int degree = 0;               ///< d
  std::vector<int> exponents;   ///< d_1 <= ... <= d_m
  std::vector<int> shifts;      ///< e_1 <= ... <= e_{m-2}

  std::size_t m() const { return exponents.size(); }
  /// "0 -> S(-13) -> S(-12)^2 (+) S(-10) -> S(-7)^3 -> S".
  std::string to_string() const;
  /// dim M(f)_t predicted by the graded Betti numbers.
  long long hilbert_function(int t) const;
};

/// Runs the generator and relation search together and certifies the
/// result against the Hilbert function of M(f).
Resolution assemble_resolution(const TernaryPoly& f, const ResolutionOptions& options = {});

/// dim (S / J_f)_t by the exact rank of the monomial multiples of the
/// partial derivatives.
std::size_t milnor_dimension(const TernaryPoly& f, int t);

/// Stable value of dim (S / J_f)_t, probed at t = 3d - 5 and 3d - 4.
/// Throws kResolutionNotStabilized when the probes differ.
std::size_t global_tjurina(const TernaryPoly& f);

/// Binomial(s + 2, 2) for s >= 0, else 0.
long long monomials_up_to(int s);

enum class CurveKind { kFree, kNearlyFree, kMSyzygy };

struct CurveClass {
  CurveKind kind = CurveKind::kMSyzygy;
  std::size_t m = 0;
  std::vector<int> exponents;

  /// "free", "nearly free", "4-syzygy".
  std::string name() const;
};

/// Free: m = 2 (and d_1 + d_2 = d - 1 is asserted). Nearly free: m = 3,
/// d_1 + d_2 = d, d_2 = d_3. Anything else is m-syzygy.
CurveClass classify(const Resolution& resolution);

}  // namespace clarr

#endif  // CLARR_MILNOR_HPP
