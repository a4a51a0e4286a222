#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unimod/errors.hpp"
#include "unimod/integer.hpp"
#include "unimod/limits.hpp"

namespace unimod {

namespace detail {
struct SystemAccess;
}

/// A unimodular system of N nonzero linear forms on an n-dimensional space,
/// stored as its coefficient matrix in standard form: row k holds the
/// coordinates of the k-th form over the base formed by the rows listed in
/// base_rows(), which therefore read as the rows of the n x n identity.
///
/// Rows keep the orientation they were given (edge orientation for graph
/// systems); comparisons that should ignore the sign of a form go through
/// sign_normalized().
///
/// Instances are immutable. Every constructor path validates rank and total
/// unimodularity, so a live object always satisfies both.
class UnimodularSystem {
 public:
  /// The system with n = 0 and N = 0. Complexity 1; dual of Upsilon^m.
  UnimodularSystem() = default;

  std::size_t dimension() const { return matrix_.cols(); }
  std::size_t size() const { return matrix_.rows(); }
  bool is_empty() const { return size() == 0; }

  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& base_rows() const { return base_rows_; }
  std::vector<std::size_t> non_base_rows() const;
  /// The rows outside the base, i.e. the block A~ of [E; A~].
  IntMatrix reduced_block() const;

  /// Per-row provenance strings; empty when the source carried none.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t row) const;

  /// Exact equality of the coefficient matrices and base rows. Labels are ignored.
  friend bool operator==(const UnimodularSystem& a, const UnimodularSystem& b) {
    return a.matrix_ == b.matrix_ && a.base_rows_ == b.base_rows_;
  }

 private:
  friend struct detail::SystemAccess;

  IntMatrix matrix_;
  std::vector<std::size_t> base_rows_;
  std::vector<std::string> labels_;
};

/// Builds a system from N x n integer rows.
///
/// The rows are first re-expressed over a Hermite basis of the group they
/// generate, so presentations that differ by a non-unimodular change of
/// coordinates (the 10 x 5 matrix with minors in {0, +-2}, or [[2]]) are
/// accepted. The first maximal independent set of rows then becomes the base
/// and every row is expanded over it; the expanded matrix must be totally
/// unimodular.
///
/// Throws DimensionError for an empty or ragged input, RankError when the
/// rows do not span n dimensions, DegenerateSystemError for a zero row and
/// NotUnimodularError (with the offending minor) when the chosen base does not
/// generate the group or the expansion is not totally unimodular.
UnimodularSystem from_matrix(const IntMatrix& raw, std::vector<std::string> labels = {});

/// det(A^T A), which equals the number of bases by Cauchy-Binet.
Integer complexity(const UnimodularSystem& sys);

/// All n-element row sets with nonzero determinant, in lexicographic order.
/// Throws CapError when N exceeds limits.enumeration_cap.
std::vector<std::vector<std::size_t>> enumerate_bases(const UnimodularSystem& sys,
                                                      const Limits& limits = {});

/// Block-diagonal sum: rows of `a` first, then rows of `b`.
UnimodularSystem direct_sum(const UnimodularSystem& a, const UnimodularSystem& b);

struct UpsilonSplit {
  /// The system with every Upsilon summand removed (empty when nothing is left).
  UnimodularSystem core;
  /// Number of Upsilon summands.
  std::size_t count = 0;
  /// Rows of the input that carry an Upsilon summand, ascending.
  std::vector<std::size_t> upsilon_rows;
  /// Rows of the input kept in the core, ascending (core row i = input row core_rows[i]).
  std::vector<std::size_t> core_rows;
};

/// Canonical decomposition sys = core + Upsilon^count. A base row is an
/// Upsilon summand exactly when its column of A~ is zero.
UpsilonSplit split_upsilon(const UnimodularSystem& sys);

/// Gale dual: the nonzero rows of [A~^T; -E] in the original row order.
/// Upsilon summands produce the zero rows and are dropped; Upsilon^m has the
/// empty system as its dual.
UnimodularSystem gale_dual(const UnimodularSystem& sys);

/// Rows of `sys` that survive into gale_dual(sys); dual row i corresponds to
/// original row gale_dual_rows(sys)[i].
std::vector<std::size_t> gale_dual_rows(const UnimodularSystem& sys);

/// Groups of rows equal up to sign, ordered by first member.
std::vector<std::vector<std::size_t>> multiplicity_classes(const UnimodularSystem& sys);

/// Upsilon^m: the m x m identity.
UnimodularSystem upsilon(std::size_t m);

}  // namespace unimod
