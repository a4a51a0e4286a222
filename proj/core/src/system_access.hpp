#pragma once

#include <string>
#include <vector>

#include "unimod/system.hpp"

namespace unimod::detail {

/// Builds systems from matrices already known to be in standard form and
/// totally unimodular (sub-blocks and block sums of valid systems).
struct SystemAccess {
  static UnimodularSystem make(IntMatrix matrix, std::vector<std::size_t> base_rows,
                               std::vector<std::string> labels) {
    UnimodularSystem sys;
    sys.matrix_ = std::move(matrix);
    sys.base_rows_ = std::move(base_rows);
    sys.labels_ = std::move(labels);
    return sys;
  }
};

}  // namespace unimod::detail
