#include <doctest.h>

#include <random>

#include "clarr/linalg.hpp"

using namespace clarr;

namespace {

bool annihilates(const QMatrix& a, const QVector& v) {
  for (const Rational& x : a * v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("row_reduce examples") {
  const auto id = row_reduce(QMatrix::identity(2));
  CHECK(id.reduced == QMatrix::identity(2));
  CHECK(id.rank == 2);

  const auto r = row_reduce(QMatrix{{2, 4}, {1, 2}});
  CHECK(r.reduced == QMatrix{{1, 2}, {0, 0}});
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});

  const auto zero = row_reduce(QMatrix(2, 3));
  CHECK(zero.reduced == QMatrix(2, 3));
  CHECK(zero.rank == 0);

  const auto frac = row_reduce(QMatrix{{Rational(1, 2), Rational(1, 3), 1}, {0, 1, Rational(2, 5)}});
  CHECK(frac.reduced == QMatrix{{1, 0, Rational(26, 15)}, {0, 1, Rational(2, 5)}});
}

TEST_CASE("kernel_basis examples") {
  const auto k = kernel_basis(QMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == QVector{-1, 1});
  CHECK(kernel_basis(QMatrix::identity(3)).empty());
  const auto z = kernel_basis(QMatrix(2, 3));
  CHECK(z.size() == 3);
  CHECK(z[0] == QVector{1, 0, 0});
}

TEST_CASE("property: rank-nullity, exact kernels, determinism") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 7;
    QMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        a.at(i, j) = rng() % 3 == 0 ? Rational(0) : Rational(entry(rng), 1 + rng() % 4);
      }
    }
    const auto red = row_reduce(a);
    const auto ker = kernel_basis(a);
    CHECK(red.rank + ker.size() == cols);
    CHECK(rank(a) == red.rank);
    for (const QVector& v : ker) CHECK(annihilates(a, v));
    // Pivot columns are unit vectors.
    for (std::size_t i = 0; i < red.rank; ++i) {
      for (std::size_t r = 0; r < rows; ++r) {
        CHECK(red.reduced.at(r, red.pivots[i]) == (r == i ? 1 : 0));
      }
    }
    CHECK(row_reduce(a).reduced == red.reduced);

    EchelonSpan span(cols);
    for (std::size_t i = 0; i < rows; ++i) span.insert(a.row(i));
    CHECK(span.rank() == red.rank);
    for (std::size_t i = 0; i < rows; ++i) CHECK(span.contains(a.row(i)));
  }
}

TEST_CASE("EchelonSpan") {
  EchelonSpan span(3);
  CHECK(span.insert(QVector{1, 2, 3}));
  CHECK_FALSE(span.insert(QVector{2, 4, 6}));
  CHECK(span.insert(std::vector<Integer>{0, 1, 1}));
  CHECK(span.contains(QVector{1, 3, 4}));
  CHECK_FALSE(span.contains(QVector{0, 0, 1}));
  CHECK(span.rank() == 2);
}
