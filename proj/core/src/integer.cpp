#include "unimod/integer.hpp"

#include <ostream>
#include <sstream>

#include "unimod/errors.hpp"

namespace unimod {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return {s.begin(), s.end()};
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  return m;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols) const {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

IntMatrix IntMatrix::without_rows(std::span<const std::size_t> rows) const {
  std::vector<bool> drop(rows_, false);
  for (std::size_t r : rows) drop.at(r) = true;
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!drop[r]) keep.push_back(r);
  return select_rows(keep);
}

bool IntMatrix::row_is_zero(std::size_t r) const { return is_zero(row_span(r)); }

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& x : entries_)
    if (abs(x) > best) best = abs(x);
  return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntVector operator*(std::span<const Integer> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw DimensionError("vector-matrix product shape mismatch");
  IntVector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

int leading_sign(std::span<const Integer> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return sgn(x) > 0 ? 1 : -1;
  return 0;
}

IntVector sign_normalized(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  if (leading_sign(v) < 0)
    for (auto& x : out) x = -x;
  return out;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

}  // namespace unimod
