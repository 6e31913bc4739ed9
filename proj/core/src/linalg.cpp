#include "clarr/linalg.hpp"

#include <stdexcept>

namespace clarr {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("row length mismatch");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

QVector QMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("dimension mismatch in matrix-vector product");
  }
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (sgn(a) != 0 && sgn(v[j]) != 0) {
        out[i] += a * v[j];
      }
    }
  }
  return out;
}

namespace {

// v <- p * v - v[col] * row, where p = row[col]; then divide by content.
void eliminate(std::vector<Integer>& v, const std::vector<Integer>& row, std::size_t col) {
  const Integer factor = v[col];
  const Integer& pivot = row[col];
  Integer tmp;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const bool row_zero = sgn(row[j]) == 0;
    if (sgn(v[j]) != 0) {
      v[j] *= pivot;
    }
    if (!row_zero) {
      mpz_mul(tmp.get_mpz_t(), factor.get_mpz_t(), row[j].get_mpz_t());
      v[j] -= tmp;
    }
  }
  make_primitive(v);
}

}  // namespace

std::size_t EchelonSpan::reduce(std::vector<Integer>& v) const {
  for (const auto& [col, row] : rows_) {
    if (sgn(v[col]) != 0) {
      eliminate(v, row, col);
    }
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) {
      return j;
    }
  }
  return dimension_;
}

bool EchelonSpan::insert(std::span<const Rational> v) {
  if (v.size() != dimension_) {
    throw std::invalid_argument("vector length does not match span dimension");
  }
  return insert(primitive_integer_vector(v));
}

bool EchelonSpan::insert(std::vector<Integer> v) {
  if (v.size() != dimension_) {
    throw std::invalid_argument("vector length does not match span dimension");
  }
  make_primitive(v);
  const std::size_t lead = reduce(v);
  if (lead == dimension_) {
    return false;
  }
  rows_.emplace(lead, std::move(v));
  return true;
}

bool EchelonSpan::contains(std::span<const Rational> v) const {
  auto w = primitive_integer_vector(v);
  return reduce(w) == dimension_;
}

RowReduction row_reduce(const QMatrix& a) {
  EchelonSpan span(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    span.insert(a.row(i));
  }

  // Back-substitution, bottom pivot first, on primitive integer rows.
  std::vector<std::pair<std::size_t, std::vector<Integer>>> rows(span.rows().begin(),
                                                                 span.rows().end());
  for (std::size_t k = rows.size(); k-- > 0;) {
    const auto& [col, pivot_row] = rows[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(rows[i].second[col]) != 0) {
        eliminate(rows[i].second, pivot_row, col);
      }
    }
  }

  RowReduction out;
  out.reduced = QMatrix(a.rows(), a.cols());
  out.rank = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [col, row] = rows[i];
    out.pivots.push_back(col);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(row[j]) != 0) {
        out.reduced.at(i, j) = make_rational(row[j], row[col]);
      }
    }
  }
  return out;
}

std::size_t rank(const QMatrix& a) {
  EchelonSpan span(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    span.insert(a.row(i));
  }
  return span.rank();
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
  const RowReduction rr = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : rr.pivots) {
    is_pivot[p] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    QVector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      const Rational& e = rr.reduced.at(i, free);
      if (sgn(e) != 0) {
        v[rr.pivots[i]] = -e;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace clarr
