#ifndef CLARR_LINALG_HPP
#define CLARR_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "clarr/rational.hpp"

namespace clarr {

using QVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  QVector operator*(std::span<const Rational> v) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowReduction {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Rows are scaled to primitive integer vectors
/// before elimination and kept primitive during it; pivots are normalized to
/// 1 at the end.
RowReduction row_reduce(const QMatrix& a);

std::size_t rank(const QMatrix& a);

/// Right null space. One vector per free column, in column order, with that
/// free variable set to 1 and the other free variables 0.
std::vector<QVector> kernel_basis(const QMatrix& a);

/// Incrementally maintained echelon basis of a subspace of Q^n. Rows are
/// primitive integer vectors keyed by pivot column.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the spanning set. Returns true iff the rank grew.
  bool insert(std::span<const Rational> v);
  bool insert(std::vector<Integer> v);
  bool contains(std::span<const Rational> v) const;

  /// Pivot column -> row; rows are echelon but not back-substituted.
  const std::map<std::size_t, std::vector<Integer>>& rows() const { return rows_; }

 private:
  /// Reduces v against the current rows; returns the first nonzero column
  /// of the remainder or dimension_ when it vanishes.
  std::size_t reduce(std::vector<Integer>& v) const;

  std::size_t dimension_;
  std::map<std::size_t, std::vector<Integer>> rows_;
};

}  // namespace clarr

#endif  // CLARR_LINALG_HPP
