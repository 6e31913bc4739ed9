#ifndef CLARR_TESTS_SUPPORT_HPP
#define CLARR_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "clarr/arrangement.hpp"
#include "clarr/linalg.hpp"
#include "clarr/milnor.hpp"
#include "clarr/ternary_poly.hpp"

namespace clarr::test {

inline TernaryPoly X() { return TernaryPoly::variable(Var::x); }
inline TernaryPoly Y() { return TernaryPoly::variable(Var::y); }
inline TernaryPoly Z() { return TernaryPoly::variable(Var::z); }
inline TernaryPoly C(long n) { return TernaryPoly::constant(Rational(n)); }

inline TernaryPoly circle() { return X() * X() + Y() * Y() - C(25) * Z() * Z(); }

std::string fixture_path(const std::string& name);
Arrangement fixture(const std::string& name);

/// Q1 and Q2 written out directly as products, independent of the file parser.
TernaryPoly q1();
TernaryPoly q2();

/// Coefficients of (a, b, c) on three copies of the degree-r DRL basis.
QVector flatten(const SyzygyVector& v);

/// The arrangement with every component replaced by its image under M.
Arrangement transform(const Arrangement& arrangement, const Matrix3& m);

}  // namespace clarr::test

#endif  // CLARR_TESTS_SUPPORT_HPP
