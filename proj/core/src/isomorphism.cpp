#include "unimod/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "unimod/linalg.hpp"

namespace unimod {
namespace {

using SmallRow = std::vector<std::int64_t>;

SmallRow to_small(std::span<const Integer> row) {
  SmallRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (abs(row[i]) > 1) throw std::logic_error("system matrix entry outside {-1, 0, 1}");
    out[i] = row[i].get_si();
  }
  return out;
}

SmallRow normalized(SmallRow row) {
  auto lead = std::find_if(row.begin(), row.end(), [](std::int64_t x) { return x != 0; });
  if (lead != row.end() && *lead < 0)
    for (auto& x : row) x = -x;
  return row;
}

// Backtracking over base changes T whose rows are signed distinct rows of the
// target. Row k of the source becomes checkable at the level where the last
// column of its support has been assigned.
class CorrespondenceSearch {
 public:
  CorrespondenceSearch(const UnimodularSystem& source, const UnimodularSystem& target)
      : n_(source.dimension()) {
    for (std::size_t r = 0; r < source.size(); ++r) source_.push_back(to_small(source.matrix().row_span(r)));
    for (std::size_t r = 0; r < target.size(); ++r) {
      target_.push_back(to_small(target.matrix().row_span(r)));
      // Candidates in target row order, so a system matched against itself
      // meets the identity first.
      if (remaining_[normalized(target_.back())]++ == 0) candidates_.push_back(normalized(target_.back()));
    }
    ready_.resize(n_);
    for (std::size_t r = 0; r < source_.size(); ++r) {
      std::size_t last = 0;
      for (std::size_t c = 0; c < n_; ++c)
        if (source_[r][c] != 0) last = c;
      ready_[last].push_back(r);
    }
    base_change_.assign(n_, SmallRow(n_, 0));
  }

  /// Visits every valid base change in search order; the visitor returns false to stop.
  template <typename Visit>
  void run(Visit&& visit) {
    stop_ = false;
    descend(0, visit);
  }

  SignedCorrespondence witness() const {
    SignedCorrespondence corr;
    const std::size_t N = source_.size();
    corr.permutation.resize(N);
    corr.signs.resize(N);
    std::map<SmallRow, std::vector<std::size_t>> pool;
    for (std::size_t r = target_.size(); r-- > 0;) pool[normalized(target_[r])].push_back(r);
    for (std::size_t k = 0; k < N; ++k) {
      SmallRow image = apply(k, n_);
      auto& slots = pool.at(normalized(image));
      const std::size_t t = slots.back();
      slots.pop_back();
      corr.permutation[k] = t;
      corr.signs[k] = image == target_[t] ? 1 : -1;
    }
    corr.base_change = IntMatrix(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) corr.base_change(i, j) = base_change_[i][j];
    return corr;
  }

 private:
  SmallRow apply(std::size_t row, std::size_t levels) const {
    SmallRow image(n_, 0);
    for (std::size_t c = 0; c < levels; ++c) {
      const std::int64_t coef = source_[row][c];
      if (coef == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) image[j] += coef * base_change_[c][j];
    }
    return image;
  }

  template <typename Visit>
  void descend(std::size_t level, Visit& visit) {
    if (stop_) return;
    if (level == n_) {
      if (!visit()) stop_ = true;
      return;
    }
    for (const SmallRow& candidate : candidates_) {
      for (int sign : {1, -1}) {
        for (std::size_t j = 0; j < n_; ++j) base_change_[level][j] = sign * candidate[j];
        std::vector<SmallRow> consumed;
        bool ok = true;
        for (std::size_t r : ready_[level]) {
          SmallRow key = normalized(apply(r, level + 1));
          auto it = remaining_.find(key);
          if (it == remaining_.end() || it->second == 0) {
            ok = false;
            break;
          }
          --it->second;
          consumed.push_back(std::move(key));
        }
        if (ok) descend(level + 1, visit);
        for (const auto& key : consumed) ++remaining_[key];
        if (stop_) return;
      }
    }
  }

  std::size_t n_;
  std::vector<SmallRow> source_;
  std::vector<SmallRow> target_;
  std::map<SmallRow, std::size_t> remaining_;
  std::vector<SmallRow> candidates_;
  std::vector<std::vector<std::size_t>> ready_;
  std::vector<SmallRow> base_change_;
  bool stop_ = false;
};

void check_cap(const UnimodularSystem& sys, const Limits& limits) {
  if (sys.size() > limits.enumeration_cap)
    throw CapError("isomorphism search over " + std::to_string(sys.size()) + " forms exceeds cap " +
                   std::to_string(limits.enumeration_cap));
}

std::vector<std::size_t> class_profile(const UnimodularSystem& sys) {
  std::vector<std::size_t> sizes;
  for (const auto& cls : multiplicity_classes(sys)) sizes.push_back(cls.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> base_membership_profile(const UnimodularSystem& sys, const Limits& limits) {
  std::vector<std::size_t> counts(sys.size(), 0);
  for (const auto& base : enumerate_bases(sys, limits))
    for (std::size_t r : base) ++counts[r];
  std::sort(counts.begin(), counts.end());
  return counts;
}

Integer factorial(std::size_t m) {
  Integer f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

bool is_correspondence(const UnimodularSystem& source, const UnimodularSystem& target,
                       const SignedCorrespondence& corr) {
  const std::size_t N = source.size();
  const std::size_t n = source.dimension();
  if (target.size() != N || target.dimension() != n) return false;
  if (corr.permutation.size() != N || corr.signs.size() != N) return false;
  if (corr.base_change.rows() != n || corr.base_change.cols() != n) return false;
  if (abs(determinant(corr.base_change)) != 1) return false;
  std::vector<bool> hit(N, false);
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t t = corr.permutation[k];
    if (t >= N || hit[t]) return false;
    hit[t] = true;
    if (corr.signs[k] != 1 && corr.signs[k] != -1) return false;
    IntVector image = source.matrix().row_span(k) * corr.base_change;
    IntVector expected = target.matrix().row(t);
    if (corr.signs[k] < 0)
      for (auto& x : expected) x = -x;
    if (image != expected) return false;
  }
  return true;
}

std::optional<SignedCorrespondence> are_isomorphic(const UnimodularSystem& a, const UnimodularSystem& b,
                                                   const Limits& limits) {
  check_cap(a, limits);
  check_cap(b, limits);
  if (a.size() != b.size() || a.dimension() != b.dimension()) return std::nullopt;
  if (complexity(a) != complexity(b)) return std::nullopt;
  if (class_profile(a) != class_profile(b)) return std::nullopt;
  if (base_membership_profile(a, limits) != base_membership_profile(b, limits)) return std::nullopt;

  CorrespondenceSearch search(a, b);
  std::optional<SignedCorrespondence> found;
  search.run([&] {
    found = search.witness();
    return false;
  });
  return found;
}

Integer automorphism_count(const UnimodularSystem& sys, const Limits& limits) {
  check_cap(sys, limits);
  CorrespondenceSearch search(sys, sys);
  Integer base_changes = 0;
  search.run([&] {
    ++base_changes;
    return true;
  });
  // Each base change fixes the image of every row up to its multiplicity
  // class; rows inside a class can be matched in any order.
  Integer per_change = 1;
  for (const auto& cls : multiplicity_classes(sys)) per_change *= factorial(cls.size());
  return base_changes * per_change;
}

}  // namespace unimod
