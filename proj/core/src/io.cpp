#include "unimod/io.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "unimod/errors.hpp"

namespace unimod {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-empty, non-comment lines; comment lines are passed to `on_comment`.
template <typename OnComment>
std::vector<Line> content_lines(std::string_view text, OnComment on_comment) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      on_comment(line.substr(1));
      continue;
    }
    lines.push_back({number, line});
  }
  return lines;
}

std::size_t parse_count(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || end != word.data() + word.size())
    throw ParseError("line " + std::to_string(line) + ": expected a count, got '" + std::string(word) + "'");
  return value;
}

Integer parse_integer(std::string_view word, const std::string& where) {
  std::string_view digits = word;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError(where + ": expected an integer, got '" + std::string(word) + "'");
  std::string text(word);
  if (text.front() == '+') text.erase(0, 1);
  return Integer(text, 10);
}

std::pair<std::size_t, std::size_t> parse_header(const std::vector<Line>& lines, const char* what) {
  if (lines.empty()) throw ParseError(std::string("empty ") + what);
  const auto words = split_words(lines[0].text);
  if (words.size() != 2)
    throw ParseError("line " + std::to_string(lines[0].number) + ": header must be two counts");
  return {parse_count(words[0], lines[0].number), parse_count(words[1], lines[0].number)};
}

MatrixFile parse_matrix_text(std::string_view text) {
  MatrixFile out;
  bool have_labels = false;
  const auto lines = content_lines(text, [&](std::string_view comment) {
    comment = trim(comment);
    constexpr std::string_view key = "labels:";
    if (!comment.starts_with(key)) return;
    if (have_labels) throw ParseError("labels given twice");
    have_labels = true;
    for (auto w : split_words(comment.substr(key.size()))) out.labels.emplace_back(w);
  });
  const auto [rows, cols] = parse_header(lines, "matrix file");
  if (lines.size() - 1 != rows)
    throw ParseError("header announces " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1));
  out.matrix = IntMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[r + 1];
    const auto words = split_words(line.text);
    const std::string where = "line " + std::to_string(line.number);
    if (words.size() != cols)
      throw ParseError(where + ": expected " + std::to_string(cols) + " entries, found " + std::to_string(words.size()));
    for (std::size_t c = 0; c < cols; ++c) out.matrix(r, c) = parse_integer(words[c], where);
  }
  if (have_labels && out.labels.size() != rows)
    throw ParseError("expected " + std::to_string(rows) + " labels, found " + std::to_string(out.labels.size()));
  return out;
}

Integer json_integer(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()), 10);
    return Integer(std::to_string(value.get<std::int64_t>()), 10);
  }
  if (value.is_string()) return parse_integer(value.get<std::string>(), where);
  throw ParseError(where + ": expected an integer");
}

MatrixFile parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw ParseError("JSON matrix needs a \"rows\" array");
  const json& rows = doc["rows"];
  if (rows.empty()) throw ParseError("JSON matrix has no rows");
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array()) throw ParseError("row " + std::to_string(r + 1) + " is not an array");
    if (r == 0) cols = rows[r].size();
    if (rows[r].size() != cols) throw ParseError("row " + std::to_string(r + 1) + " has the wrong length");
  }
  MatrixFile out;
  out.matrix = IntMatrix(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out.matrix(r, c) = json_integer(rows[r][c], "row " + std::to_string(r + 1));
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != rows.size())
      throw ParseError("\"labels\" must be an array with one string per row");
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      out.labels.push_back(l.get<std::string>());
    }
  }
  return out;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& rows) {
  std::vector<std::size_t> out(rows);
  for (auto& r : out) ++r;
  return out;
}

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

const char* verdict(bool ok) { return ok ? "verified" : "FAILED"; }

}  // namespace

MatrixFile parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_matrix_json(text);
  return parse_matrix_text(text);
}

std::string format_matrix(const IntMatrix& m, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  if (!labels.empty()) {
    os << "# labels:";
    for (const auto& l : labels) os << ' ' << l;
    os << '\n';
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

std::string format_system(const UnimodularSystem& sys) { return format_matrix(sys.matrix(), sys.labels()); }

Multigraph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text, [](std::string_view) {});
  const auto [vertices, edges] = parse_header(lines, "edge list");
  if (lines.size() - 1 != edges)
    throw ParseError("header announces " + std::to_string(edges) + " edges, found " + std::to_string(lines.size() - 1));
  std::vector<Edge> list;
  for (std::size_t e = 0; e < edges; ++e) {
    const Line& line = lines[e + 1];
    const auto words = split_words(line.text);
    if (words.size() != 2) throw ParseError("line " + std::to_string(line.number) + ": expected \"tail head\"");
    const std::size_t tail = parse_count(words[0], line.number);
    const std::size_t head = parse_count(words[1], line.number);
    if (tail == 0 || head == 0 || tail > vertices || head > vertices)
      throw DimensionError("line " + std::to_string(line.number) + ": vertex outside [1, " +
                           std::to_string(vertices) + "]");
    list.push_back({tail - 1, head - 1});
  }
  return Multigraph(vertices, std::move(list));
}

std::string format_edge_list(const Multigraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.tail + 1 << ' ' << e.head + 1 << '\n';
  return os.str();
}

std::string polytope_report_text(const UnimodularSystem& sys, const PolytopeReport& report) {
  std::ostringstream os;
  os << "forms " << sys.size() << ", dimension " << sys.dimension() << '\n';
  os << "points " << report.points.size() << (report.origin_present ? " (origin included)" : "") << '\n';
  os << "census by square:\n";
  for (const auto& [square, count] : report.census) os << "  " << square << ": " << count << '\n';
  os << "vertices " << report.vertices.size() << '\n';
  for (std::size_t v : report.vertices) os << "  " << join_ints(report.points[v].coords) << '\n';
  os << "facets " << 2 * report.facet_pairs.size() << '\n';
  os << "  rows | +points +vertices | -points -vertices\n";
  for (const auto& pair : report.facet_pairs) {
    os << "  " << join(one_based(pair.rows), ",") << " | " << pair.positive.points.size() << ' '
       << pair.positive.vertices.size() << " | " << pair.negative.points.size() << ' '
       << pair.negative.vertices.size() << '\n';
  }
  os << "centrally symmetric: " << (report.centrally_symmetric ? "yes" : "no") << '\n';
  os << "zonotope: " << verdict(report.zonotope_verified) << '\n';
  os << "reflexive: " << verdict(report.reflexive_verified) << '\n';
  return os.str();
}

std::string polytope_report_json(const UnimodularSystem& sys, const PolytopeReport& report) {
  json out;
  out["forms"] = sys.size();
  out["dimension"] = sys.dimension();
  json census = json::object();
  for (const auto& [square, count] : report.census) census[std::to_string(square)] = count;
  out["census"] = census;
  out["origin"] = report.origin_present;
  json points = json::array();
  for (const auto& p : report.points) points.push_back(p.coords);
  out["points"] = points;
  json vertices = json::array();
  for (std::size_t v : report.vertices) vertices.push_back(report.points[v].coords);
  out["vertices"] = report.vertices.size();
  out["vertex_points"] = vertices;
  out["facets"] = 2 * report.facet_pairs.size();
  json table = json::array();
  for (const auto& pair : report.facet_pairs) {
    json row;
    row["rows"] = one_based(pair.rows);
    row["positive"] = {{"points", pair.positive.points.size()}, {"vertices", pair.positive.vertices.size()}};
    row["negative"] = {{"points", pair.negative.points.size()}, {"vertices", pair.negative.vertices.size()}};
    table.push_back(row);
  }
  out["facet_table"] = table;
  out["centrally_symmetric"] = report.centrally_symmetric;
  out["zonotope"] = report.zonotope_verified;
  out["reflexive"] = report.reflexive_verified;
  return out.dump();
}

}  // namespace unimod
