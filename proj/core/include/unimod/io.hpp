#pragma once

// Text and JSON formats.
//
// Matrix text:   "N n", then N rows of n integers; '#' starts a comment line,
//                and a comment of the form "# labels: a b c" names the rows.
// Matrix JSON:   {"rows": [[...], ...], "labels": [...]}; entries may be
//                numbers or decimal strings.
// Edge list:     "m N" (vertices, edges), then N lines "tail head" with
//                1-based vertices; '#' comments allowed.

#include <string>
#include <string_view>
#include <vector>

#include "unimod/graph.hpp"
#include "unimod/integer.hpp"
#include "unimod/lattice.hpp"
#include "unimod/system.hpp"

namespace unimod {

struct MatrixFile {
  IntMatrix matrix;
  std::vector<std::string> labels;
};

/// Accepts either format; JSON is recognized by a leading '{'. Throws ParseError.
MatrixFile parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m, const std::vector<std::string>& labels = {});
std::string format_system(const UnimodularSystem& sys);

/// Throws ParseError, or DimensionError for a vertex outside [1, m].
Multigraph parse_edge_list(std::string_view text);
std::string format_edge_list(const Multigraph& g);

/// Deterministic reports: points in lexicographic order, 1-based row indices.
std::string polytope_report_text(const UnimodularSystem& sys, const PolytopeReport& report);
std::string polytope_report_json(const UnimodularSystem& sys, const PolytopeReport& report);

}  // namespace unimod
