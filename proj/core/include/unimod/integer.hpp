#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unimod {

/// Arbitrary-precision integer used for every entry, determinant and count.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Every row must have exactly `cols` entries; `cols` is explicit so that
  /// an empty row list still has a well-defined shape.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Integer> row_span(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> rows) const;
  IntMatrix select_cols(std::span<const std::size_t> cols) const;
  IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  IntMatrix without_rows(std::span<const std::size_t> rows) const;

  bool row_is_zero(std::size_t r) const;
  /// Largest absolute value of any entry (0 for an empty matrix).
  Integer max_abs() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(std::span<const Integer> v, const IntMatrix& m);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
bool is_zero(std::span<const Integer> v);

/// The same vector with its first nonzero entry made positive.
IntVector sign_normalized(std::span<const Integer> v);
/// +1 or -1 according to the sign of the first nonzero entry, 0 for a zero vector.
int leading_sign(std::span<const Integer> v);

std::string to_string(std::span<const Integer> v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace unimod
