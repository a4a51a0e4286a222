#include "unimod/system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "system_access.hpp"
#include "unimod/linalg.hpp"

namespace unimod {
namespace {

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i] + 1;
  os << '}';
  return os.str();
}

}  // namespace

std::vector<std::size_t> UnimodularSystem::non_base_rows() const {
  std::vector<bool> in_base(size(), false);
  for (std::size_t r : base_rows_) in_base[r] = true;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < size(); ++r)
    if (!in_base[r]) out.push_back(r);
  return out;
}

IntMatrix UnimodularSystem::reduced_block() const {
  return matrix_.select_rows(non_base_rows());
}

std::string UnimodularSystem::label(std::size_t row) const {
  if (row < labels_.size()) return labels_[row];
  return std::to_string(row + 1);
}

UnimodularSystem from_matrix(const IntMatrix& raw, std::vector<std::string> labels) {
  const std::size_t N = raw.rows();
  const std::size_t n = raw.cols();
  if (N == 0 || n == 0) throw DimensionError("a system needs at least one form and one coordinate");
  if (!labels.empty() && labels.size() != N)
    throw DimensionError("label count " + std::to_string(labels.size()) + " does not match row count " +
                         std::to_string(N));
  for (std::size_t r = 0; r < N; ++r)
    if (raw.row_is_zero(r)) throw DegenerateSystemError("row " + std::to_string(r + 1) + " is the zero form");
  const std::size_t r = rank(raw);
  if (r != n)
    throw RankError("rows span dimension " + std::to_string(r) + ", expected " + std::to_string(n));

  // Coordinates over a basis of the group generated by all rows.
  const IntMatrix group_basis = hermite_normal_form(raw);
  IntMatrix in_group(N, n);
  for (std::size_t k = 0; k < N; ++k) {
    const IntVector x = solve_unimodular(group_basis, raw.row(k));
    for (std::size_t j = 0; j < n; ++j) in_group(k, j) = x[j];
  }

  const std::vector<std::size_t> base = first_independent_rows(raw);
  const IntMatrix base_block = in_group.select_rows(base);
  const Integer d = determinant(base_block);
  if (abs(d) != 1) {
    std::vector<std::size_t> all_cols(n);
    std::iota(all_cols.begin(), all_cols.end(), std::size_t{0});
    throw NotUnimodularError("base rows " + join_indices(base) + " generate a subgroup of index " +
                                 Integer(abs(d)).get_str() + " in the group generated by all rows",
                             Minor{base, all_cols, d});
  }

  IntMatrix standard(N, n);
  for (std::size_t k = 0; k < N; ++k) {
    const IntVector x = solve_unimodular(base_block, in_group.row(k));
    for (std::size_t j = 0; j < n; ++j) standard(k, j) = x[j];
  }

  auto sys = detail::SystemAccess::make(std::move(standard), base, std::move(labels));
  const std::vector<std::size_t> others = sys.non_base_rows();
  if (!others.empty()) {
    if (auto witness = find_non_unimodular_minor(sys.reduced_block())) {
      for (auto& row : witness->rows) row = others[row];
      throw NotUnimodularError("minor on rows " + join_indices(witness->rows) + ", columns " +
                                   join_indices(witness->cols) + " equals " + witness->value.get_str(),
                               witness);
    }
  }
  return sys;
}

Integer complexity(const UnimodularSystem& sys) {
  const IntMatrix& a = sys.matrix();
  return determinant(a.transpose() * a);
}

std::vector<std::vector<std::size_t>> enumerate_bases(const UnimodularSystem& sys, const Limits& limits) {
  const std::size_t N = sys.size();
  const std::size_t n = sys.dimension();
  if (N > limits.enumeration_cap)
    throw CapError("base enumeration over " + std::to_string(N) + " forms exceeds cap " +
                   std::to_string(limits.enumeration_cap));
  std::vector<std::vector<std::size_t>> bases;
  std::vector<std::size_t> subset(n);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  do {
    if (sgn(determinant(sys.matrix().select_rows(subset))) != 0) bases.push_back(subset);
  } while (next_subset(subset, N));
  return bases;
}

UnimodularSystem direct_sum(const UnimodularSystem& a, const UnimodularSystem& b) {
  const std::size_t na = a.dimension(), Na = a.size();
  IntMatrix m(Na + b.size(), na + b.dimension());
  for (std::size_t r = 0; r < Na; ++r)
    for (std::size_t c = 0; c < na; ++c) m(r, c) = a.matrix()(r, c);
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.dimension(); ++c) m(Na + r, na + c) = b.matrix()(r, c);

  std::vector<std::size_t> base = a.base_rows();
  for (std::size_t r : b.base_rows()) base.push_back(Na + r);

  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (std::size_t r = 0; r < Na; ++r) labels.push_back(a.label(r));
    for (std::size_t r = 0; r < b.size(); ++r) labels.push_back(b.label(r));
  }
  return detail::SystemAccess::make(std::move(m), std::move(base), std::move(labels));
}

UpsilonSplit split_upsilon(const UnimodularSystem& sys) {
  const std::vector<std::size_t> others = sys.non_base_rows();
  const auto& base = sys.base_rows();
  std::vector<bool> drop_col(sys.dimension(), false);
  UpsilonSplit split;
  for (std::size_t j = 0; j < base.size(); ++j) {
    bool zero = std::all_of(others.begin(), others.end(),
                            [&](std::size_t r) { return sgn(sys.matrix()(r, j)) == 0; });
    if (zero) {
      drop_col[j] = true;
      split.upsilon_rows.push_back(base[j]);
    }
  }
  std::sort(split.upsilon_rows.begin(), split.upsilon_rows.end());
  split.count = split.upsilon_rows.size();

  std::vector<std::size_t> keep_cols;
  for (std::size_t j = 0; j < sys.dimension(); ++j)
    if (!drop_col[j]) keep_cols.push_back(j);
  for (std::size_t r = 0; r < sys.size(); ++r)
    if (!std::binary_search(split.upsilon_rows.begin(), split.upsilon_rows.end(), r))
      split.core_rows.push_back(r);
  if (keep_cols.empty()) return split;

  std::vector<std::size_t> new_index(sys.size(), 0);
  for (std::size_t i = 0; i < split.core_rows.size(); ++i) new_index[split.core_rows[i]] = i;
  std::vector<std::size_t> core_base;
  for (std::size_t j : keep_cols) core_base.push_back(new_index[base[j]]);

  std::vector<std::string> labels;
  if (!sys.labels().empty())
    for (std::size_t r : split.core_rows) labels.push_back(sys.labels()[r]);
  split.core = detail::SystemAccess::make(sys.matrix().submatrix(split.core_rows, keep_cols),
                                          std::move(core_base), std::move(labels));
  return split;
}

namespace {

// Rows of [A~^T; -E] in original row order, zero rows included.
IntMatrix dual_matrix_with_zero_rows(const UnimodularSystem& sys) {
  const std::vector<std::size_t> others = sys.non_base_rows();
  const auto& base = sys.base_rows();
  const std::size_t m = others.size();
  IntMatrix dual(sys.size(), m);
  for (std::size_t j = 0; j < base.size(); ++j)
    for (std::size_t t = 0; t < m; ++t) dual(base[j], t) = sys.matrix()(others[t], j);
  for (std::size_t t = 0; t < m; ++t) dual(others[t], t) = -1;
  return dual;
}

}  // namespace

std::vector<std::size_t> gale_dual_rows(const UnimodularSystem& sys) {
  const IntMatrix dual = dual_matrix_with_zero_rows(sys);
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < dual.rows(); ++r)
    if (!dual.row_is_zero(r)) kept.push_back(r);
  return kept;
}

UnimodularSystem gale_dual(const UnimodularSystem& sys) {
  if (sys.size() == sys.dimension()) return {};
  const IntMatrix dual = dual_matrix_with_zero_rows(sys);
  const std::vector<std::size_t> kept = gale_dual_rows(sys);
  std::vector<std::string> labels;
  if (!sys.labels().empty())
    for (std::size_t r : kept) labels.push_back(sys.labels()[r]);
  return from_matrix(dual.select_rows(kept), std::move(labels));
}

std::vector<std::vector<std::size_t>> multiplicity_classes(const UnimodularSystem& sys) {
  std::map<IntVector, std::size_t> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t r = 0; r < sys.size(); ++r) {
    auto key = sign_normalized(sys.matrix().row_span(r));
    auto [it, inserted] = index.try_emplace(std::move(key), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(r);
  }
  return classes;
}

UnimodularSystem upsilon(std::size_t m) {
  std::vector<std::size_t> base(m);
  std::iota(base.begin(), base.end(), std::size_t{0});
  return detail::SystemAccess::make(IntMatrix::identity(m), std::move(base), {});
}

}  // namespace unimod
