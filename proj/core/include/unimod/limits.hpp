#pragma once

#include <cstddef>

namespace unimod {

/// Size caps for the exponential enumerations and the worker count used by
/// the parallel scans. The defaults cover every instance in the catalog.
struct Limits {
  /// Maximum number of forms for base enumeration, isomorphism and automorphisms.
  std::size_t enumeration_cap = 16;
  /// Maximum number of forms for the 3^N lattice-point scan of the polytope.
  std::size_t scan_cap = 18;
  /// Maximum number of forms for the 2^N cube-projection check.
  std::size_t projection_cap = 16;
  unsigned threads = 1;
};

}  // namespace unimod
