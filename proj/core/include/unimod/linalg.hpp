#pragma once

// Exact integer linear algebra shared by every other module. Nothing here
// touches floating point.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "unimod/errors.hpp"
#include "unimod/integer.hpp"

namespace unimod {

/// Fraction-free (Bareiss) determinant. Throws DimensionError for non-square input.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Indices of the first maximal linearly independent set of rows, scanning
/// rows in order and keeping each row that increases the rank.
std::vector<std::size_t> first_independent_rows(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice generated by the rows of `m`:
/// echelon form, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result has rank(m) rows.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Saturated basis of the left integer kernel {z in Z^rows : z^T m = 0},
/// returned in Hermite normal form (leading entries positive).
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Lexicographic successor of a strictly increasing index tuple drawn from
/// [0, n). Returns false once the last tuple has been passed.
bool next_subset(std::vector<std::size_t>& subset, std::size_t n);

/// Streams the k x k minors of a matrix in lexicographic order of
/// (row set, column set) without materializing them.
class MinorStream {
 public:
  /// Throws DimensionError unless 1 <= k <= min(rows, cols).
  MinorStream(const IntMatrix& m, std::size_t k);

  std::optional<Minor> next();

 private:
  IntMatrix matrix_;
  std::size_t k_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  bool done_ = false;
};

/// Visits every k x k minor in stream order; the visitor returns false to stop early.
void for_each_square_minor(const IntMatrix& m, std::size_t k,
                           const std::function<bool(const Minor&)>& visit);

/// Materialized convenience wrapper around MinorStream.
std::vector<Integer> square_minors(const IntMatrix& m, std::size_t k);

/// First minor (by size, then stream order) whose value is outside {-1, 0, 1}.
std::optional<Minor> find_non_unimodular_minor(const IntMatrix& m);

inline bool is_totally_unimodular(const IntMatrix& m) {
  return !find_non_unimodular_minor(m).has_value();
}

/// Solves x * b = v (x a row vector, i.e. v expanded over the rows of b)
/// exactly. Returns nullopt when b is singular or the solution is not integral.
std::optional<IntVector> expand_over_rows(const IntMatrix& b, const IntVector& v);

/// Integer solution of x * b = v. Throws PreconditionError when b is singular
/// or the solution is not integral, which cannot happen when |det b| = 1.
IntVector solve_unimodular(const IntMatrix& b, const IntVector& v);

/// Adjugate of a square matrix: adj(m) * m = det(m) * E.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace unimod
