#include "unimod/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "unimod/errors.hpp"

namespace unimod {
namespace {

// Every way to place two ones among five coordinates; all maximal minors are 0 or +-2.
const IntMatrix kBixbySeymourRaw{
    {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 0, 0, 1},
    {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, 1},
};

// The rows above expanded over the first five.
const IntMatrix kBixbySeymour{
    {1, 0, 0, 0, 0},  {0, 1, 0, 0, 0},  {0, 0, 1, 0, 0},  {0, 0, 0, 1, 0},  {0, 0, 0, 0, 1},
    {0, 0, 1, -1, 1}, {1, 0, 0, 1, -1}, {-1, 1, 0, 0, 1}, {1, -1, 1, 0, 0}, {0, 1, -1, 1, 0},
};

std::vector<long> range(long first, long last) {
  std::vector<long> out;
  for (long v = first; v <= last; ++v) out.push_back(v);
  return out;
}

std::vector<CatalogEntry> build_entries() {
  constexpr long kMaxParam = 64;
  return {
      {"upsilon", EntryKind::System, "m", 1, kMaxParam, range(1, 3), "m x m identity: m copies of the one-form system"},
      {"sigma", EntryKind::System, "N", 1, kMaxParam, range(1, 8), "N equal forms on a line (column of N ones)"},
      {"pair2", EntryKind::System, "", 0, 0, {}, "2 x 2 identity"},
      {"triangle3", EntryKind::System, "", 0, 0, {}, "rows (1,0), (0,1), (1,1)"},
      {"theta", EntryKind::Graph, "N", 1, kMaxParam, range(2, 6), "two vertices joined by N parallel edges"},
      {"cycle", EntryKind::Graph, "N", 2, kMaxParam, range(3, 6), "the N-gon"},
      {"complete", EntryKind::Graph, "N", 2, 8, range(3, 5), "complete graph K_N"},
      {"path", EntryKind::Graph, "m", 2, kMaxParam, range(2, 4), "path on m vertices"},
      {"bixby_seymour_raw", EntryKind::Matrix, "", 0, 0, {}, "10 x 5 matrix of all 0/1 rows with two ones"},
      {"bixby_seymour", EntryKind::System, "", 0, 0, {}, "the Bixby-Seymour system, 10 forms of rank 5"},
  };
}

Multigraph theta(long n) {
  std::vector<Edge> edges(static_cast<std::size_t>(n), Edge{0, 1});
  return Multigraph(2, std::move(edges));
}

Multigraph cycle(long n) {
  const auto m = static_cast<std::size_t>(n);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < m; ++v) edges.push_back({v, (v + 1) % m});
  return Multigraph(m, std::move(edges));
}

Multigraph complete(long n) {
  const auto m = static_cast<std::size_t>(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) edges.push_back({i, j});
  return Multigraph(m, std::move(edges));
}

Multigraph path(long n) {
  const auto m = static_cast<std::size_t>(n);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < m; ++v) edges.push_back({v, v + 1});
  return Multigraph(m, std::move(edges));
}

IntMatrix column_of_ones(long n) {
  IntMatrix m(static_cast<std::size_t>(n), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, 0) = 1;
  return m;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  const auto& entries = catalog_entries();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
  return *it;
}

CatalogObject make(std::string_view name, std::optional<long> param) {
  const CatalogEntry& entry = catalog_entry(name);
  if (entry.parametric()) {
    if (!param)
      throw CatalogError("catalog entry '" + entry.name + "' needs the parameter " + entry.param);
    if (*param < entry.min_param || *param > entry.max_param)
      throw CatalogError("catalog entry '" + entry.name + "': " + entry.param + " = " + std::to_string(*param) +
                         " outside [" + std::to_string(entry.min_param) + ", " + std::to_string(entry.max_param) +
                         "]");
  } else if (param) {
    throw CatalogError("catalog entry '" + entry.name + "' takes no parameter");
  }

  if (name == "upsilon") return upsilon(static_cast<std::size_t>(*param));
  if (name == "sigma") return from_matrix(column_of_ones(*param));
  if (name == "pair2") return from_matrix(IntMatrix{{1, 0}, {0, 1}});
  if (name == "triangle3") return from_matrix(IntMatrix{{1, 0}, {0, 1}, {1, 1}});
  if (name == "theta") return theta(*param);
  if (name == "cycle") return cycle(*param);
  if (name == "complete") return complete(*param);
  if (name == "path") return path(*param);
  if (name == "bixby_seymour_raw") return kBixbySeymourRaw;
  return from_matrix(kBixbySeymour);
}

UnimodularSystem make_system(std::string_view name, std::optional<long> param) {
  CatalogObject obj = make(name, param);
  if (auto* sys = std::get_if<UnimodularSystem>(&obj)) return std::move(*sys);
  if (auto* m = std::get_if<IntMatrix>(&obj)) return from_matrix(*m);
  throw CatalogError("catalog entry '" + std::string(name) +
                     "' is a graph; build its graphic or cographic system instead");
}

Multigraph make_graph(std::string_view name, std::optional<long> param) {
  CatalogObject obj = make(name, param);
  if (auto* g = std::get_if<Multigraph>(&obj)) return std::move(*g);
  throw CatalogError("catalog entry '" + std::string(name) + "' is not a graph");
}

IntMatrix make_matrix(std::string_view name, std::optional<long> param) {
  CatalogObject obj = make(name, param);
  if (auto* m = std::get_if<IntMatrix>(&obj)) return std::move(*m);
  if (auto* sys = std::get_if<UnimodularSystem>(&obj)) return sys->matrix();
  throw CatalogError("catalog entry '" + std::string(name) + "' is a graph, not a matrix");
}

std::optional<CatalogRef> parse_catalog_ref(std::string_view text) {
  constexpr std::string_view prefix = "catalog:";
  if (!text.starts_with(prefix)) return std::nullopt;
  text.remove_prefix(prefix.size());
  CatalogRef ref;
  const auto colon = text.find(':');
  ref.name = std::string(text.substr(0, colon));
  if (ref.name.empty()) throw CatalogError("empty catalog name");
  if (colon != std::string_view::npos) {
    const std::string_view digits = text.substr(colon + 1);
    long value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
      throw CatalogError("bad catalog parameter '" + std::string(digits) + "'");
    ref.param = value;
  }
  return ref;
}

}  // namespace unimod
