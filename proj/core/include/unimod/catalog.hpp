#pragma once

// Named constructors for the concrete systems and graphs used throughout the
// library, its tests and the CLI.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unimod/graph.hpp"
#include "unimod/integer.hpp"
#include "unimod/system.hpp"

namespace unimod {

enum class EntryKind {
  /// A verified UnimodularSystem.
  System,
  /// A Multigraph; turn it into a system with graphic_system / cographic_system.
  Graph,
  /// A raw integer matrix that from_matrix accepts but is not itself standard.
  Matrix,
};

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::System;
  /// Name of the integer parameter, empty for fixed entries.
  std::string param;
  long min_param = 0;
  long max_param = 0;
  /// Parameter values exercised by the test suites.
  std::vector<long> samples;
  std::string description;

  bool parametric() const { return !param.empty(); }
};

/// All entries in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

/// Throws CatalogError for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

using CatalogObject = std::variant<IntMatrix, UnimodularSystem, Multigraph>;

/// Builds an entry. Throws CatalogError for an unknown name, a missing or
/// unexpected parameter, or one outside [min_param, max_param].
CatalogObject make(std::string_view name, std::optional<long> param = std::nullopt);

UnimodularSystem make_system(std::string_view name, std::optional<long> param = std::nullopt);
Multigraph make_graph(std::string_view name, std::optional<long> param = std::nullopt);
/// Matrix entries verbatim, system entries as their coefficient matrix.
IntMatrix make_matrix(std::string_view name, std::optional<long> param = std::nullopt);

struct CatalogRef {
  std::string name;
  std::optional<long> param;
};

/// Parses "catalog:<name>[:<param>]"; nullopt when the prefix is absent.
/// Throws CatalogError for a malformed parameter.
std::optional<CatalogRef> parse_catalog_ref(std::string_view text);

}  // namespace unimod
