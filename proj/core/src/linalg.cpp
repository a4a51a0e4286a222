#include "unimod/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace unimod {
namespace {

void subtract_multiple(IntVector& target, const IntVector& source, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Unimodular row reduction of `rows` restricted to the first `col_limit`
// columns. Rows are permuted in place; the first returned-count rows carry
// the pivots, the remaining rows are zero on [0, col_limit). With
// `reduce_above` the entries above each pivot land in [0, pivot).
std::size_t integer_echelon(std::vector<IntVector>& rows, std::size_t col_limit, bool reduce_above) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < rows.size(); ++c) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (pivot == rows.size() || abs(rows[i][c]) < abs(rows[pivot][c])) pivot = i;
      }
      if (pivot == rows.size()) break;
      std::swap(rows[r], rows[pivot]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        subtract_multiple(rows[i], rows[r], q);
        if (sgn(rows[i][c]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& x : rows[r]) x = -x;
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        subtract_multiple(rows[i], rows[r], q);
      }
    }
    ++r;
  }
  return r;
}

void divide_by_content(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      if (pivot == n || abs(a(i, k)) < abs(a(pivot, k))) pivot = i;
    }
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  std::vector<IntVector> rows = m.row_list();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      if (pivot == rows.size() || abs(rows[i][c]) < abs(rows[pivot][c])) pivot = i;
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Integer f = rows[i][c];
      const Integer p = rows[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) rows[i][j] = rows[i][j] * p - f * rows[r][j];
      divide_by_content(rows[i]);
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> first_independent_rows(const IntMatrix& m) {
  // Incremental echelon basis: a row is independent of the kept ones iff it
  // does not reduce to zero against them.
  std::vector<IntVector> basis;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntVector v = m.row(r);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t c = pivot_cols[b];
      if (sgn(v[c]) == 0) continue;
      const Integer f = v[c];
      const Integer p = basis[b][c];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * p - f * basis[b][j];
      divide_by_content(v);
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (lead == v.end()) continue;
    pivot_cols.push_back(static_cast<std::size_t>(lead - v.begin()));
    basis.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  std::vector<IntVector> rows = m.row_list();
  const std::size_t r = integer_echelon(rows, m.cols(), true);
  rows.resize(r);
  return IntMatrix::from_rows(rows, m.cols());
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  // Augment each row with its unit vector; the row operations are unimodular,
  // so the unit-part of the rows whose m-part vanishes is a saturated kernel basis.
  std::vector<IntVector> rows(n, IntVector(k + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = m(i, j);
    rows[i][k + i] = 1;
  }
  const std::size_t pivots = integer_echelon(rows, k, false);
  std::vector<IntVector> kernel;
  for (std::size_t i = pivots; i < n; ++i) kernel.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(k), rows[i].end());
  if (kernel.empty()) return kernel;
  IntMatrix canonical = hermite_normal_form(IntMatrix::from_rows(kernel, n));
  return canonical.row_list();
}

bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  for (std::size_t i = k; i-- > 0;) {
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

MinorStream::MinorStream(const IntMatrix& m, std::size_t k) : matrix_(m), k_(k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw DimensionError("minor size " + std::to_string(k) + " out of range");
  rows_.resize(k);
  cols_.resize(k);
  std::iota(rows_.begin(), rows_.end(), std::size_t{0});
  std::iota(cols_.begin(), cols_.end(), std::size_t{0});
}

std::optional<Minor> MinorStream::next() {
  if (done_) return std::nullopt;
  Minor minor{rows_, cols_, determinant(matrix_.submatrix(rows_, cols_))};
  if (!next_subset(cols_, matrix_.cols())) {
    std::iota(cols_.begin(), cols_.end(), std::size_t{0});
    if (!next_subset(rows_, matrix_.rows())) done_ = true;
  }
  return minor;
}

void for_each_square_minor(const IntMatrix& m, std::size_t k,
                           const std::function<bool(const Minor&)>& visit) {
  MinorStream stream(m, k);
  while (auto minor = stream.next())
    if (!visit(*minor)) return;
}

std::vector<Integer> square_minors(const IntMatrix& m, std::size_t k) {
  std::vector<Integer> values;
  for_each_square_minor(m, k, [&](const Minor& minor) {
    values.push_back(minor.value);
    return true;
  });
  return values;
}

std::optional<Minor> find_non_unimodular_minor(const IntMatrix& m) {
  const std::size_t top = std::min(m.rows(), m.cols());
  std::optional<Minor> witness;
  for (std::size_t k = 1; k <= top && !witness; ++k) {
    for_each_square_minor(m, k, [&](const Minor& minor) {
      if (abs(minor.value) > 1) {
        witness = minor;
        return false;
      }
      return true;
    });
  }
  return witness;
}

std::optional<IntVector> expand_over_rows(const IntMatrix& b, const IntVector& v) {
  if (!b.is_square()) throw DimensionError("expansion basis must be square");
  if (v.size() != b.cols()) throw DimensionError("vector length does not match basis");
  const Integer d = determinant(b);
  if (sgn(d) == 0) return std::nullopt;
  IntVector x(b.rows());
  IntMatrix replaced = b;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) replaced(i, j) = v[j];
    const Integer numerator = determinant(replaced);
    if (!mpz_divisible_p(numerator.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(x[i].get_mpz_t(), numerator.get_mpz_t(), d.get_mpz_t());
    for (std::size_t j = 0; j < b.cols(); ++j) replaced(i, j) = b(i, j);
  }
  return x;
}

IntVector solve_unimodular(const IntMatrix& b, const IntVector& v) {
  auto x = expand_over_rows(b, v);
  if (!x) throw PreconditionError("basis is singular or does not generate " + to_string(v) + " over Z");
  return *x;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<std::size_t> rows(n - 1), cols(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ri = 0, ci = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (r != i) rows[ri++] = r;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) cols[ci++] = c;
      Integer cofactor = determinant(m.submatrix(rows, cols));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      adj(j, i) = cofactor;
    }
  }
  return adj;
}

}  // namespace unimod
