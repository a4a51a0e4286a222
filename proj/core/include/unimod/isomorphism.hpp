#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unimod/integer.hpp"
#include "unimod/limits.hpp"
#include "unimod/system.hpp"

namespace unimod {

/// Witness that two systems are isomorphic: for every row k of the source,
///   source.row(k) * base_change == signs[k] * target.row(permutation[k]).
struct SignedCorrespondence {
  std::vector<std::size_t> permutation;
  std::vector<int> signs;
  IntMatrix base_change;
};

/// Checks the defining identity of a correspondence and that base_change is
/// unimodular.
bool is_correspondence(const UnimodularSystem& source, const UnimodularSystem& target,
                       const SignedCorrespondence& corr);

/// First correspondence from `a` to `b` in deterministic search order, or
/// nullopt. Systems are screened by N, n, complexity, multiplicity profile and
/// the multiset of per-row base counts before any search.
/// Throws CapError when either system exceeds limits.enumeration_cap.
std::optional<SignedCorrespondence> are_isomorphic(const UnimodularSystem& a, const UnimodularSystem& b,
                                                   const Limits& limits = {});

/// Number of signed correspondences from `sys` to itself. The global sign
/// flip (identity permutation, all signs -1, base change -E) counts as a
/// distinct automorphism. Throws CapError above limits.enumeration_cap.
Integer automorphism_count(const UnimodularSystem& sys, const Limits& limits = {});

}  // namespace unimod
