#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unimod/catalog.hpp"
#include "unimod/errors.hpp"
#include "unimod/graph.hpp"
#include "unimod/io.hpp"
#include "unimod/isomorphism.hpp"
#include "unimod/lattice.hpp"
#include "unimod/linalg.hpp"
#include "unimod/system.hpp"

namespace unimod::cli {
namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  Limits limits;
  std::string source;
  std::string second;
  std::string output;
  bool enumerate = false;
  bool graphic = false;
  bool cographic = false;
  bool stabilize = false;
  bool list = false;
};

struct Outcome {
  json result = json::object();
  std::string text;
  int code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json big(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::size_t> one_based(std::vector<std::size_t> v) {
  for (auto& x : v) ++x;
  return v;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

json system_json(const UnimodularSystem& sys) {
  json out;
  out["forms"] = sys.size();
  out["dimension"] = sys.dimension();
  out["base_rows"] = one_based(sys.base_rows());
  out["rows"] = matrix_json(sys.matrix());
  if (!sys.labels().empty()) out["labels"] = sys.labels();
  return out;
}

// A <src> argument: a matrix file or a catalog reference.
struct MatrixSource {
  MatrixFile file;
  /// Canonical bytes hashed into the fingerprint.
  std::string canonical;
};

MatrixSource read_matrix_source(const std::string& src) {
  MatrixSource out;
  if (auto ref = parse_catalog_ref(src)) {
    const CatalogEntry& entry = catalog_entry(ref->name);
    if (entry.kind == EntryKind::Graph)
      throw UsageError("'" + src + "' is a graph; use: graph " + src + " --graphic|--cographic");
    out.file.matrix = make_matrix(ref->name, ref->param);
    out.canonical = format_matrix(out.file.matrix);
    return out;
  }
  out.canonical = read_file(src);
  out.file = parse_matrix(out.canonical);
  return out;
}

struct GraphSource {
  Multigraph graph;
  std::string canonical;
};

GraphSource read_graph_source(const std::string& src) {
  GraphSource out;
  if (auto ref = parse_catalog_ref(src)) {
    out.graph = make_graph(ref->name, ref->param);
    out.canonical = format_edge_list(out.graph);
    return out;
  }
  out.canonical = read_file(src);
  out.graph = parse_edge_list(out.canonical);
  return out;
}

UnimodularSystem to_system(const MatrixSource& src) { return from_matrix(src.file.matrix, src.file.labels); }

std::string minor_text(const Minor& m) {
  return "rows {" + join(one_based(m.rows)) + "} cols {" + join(one_based(m.cols)) + "} value " + m.value.get_str();
}

json minor_json(const Minor& m) {
  return {{"rows", one_based(m.rows)}, {"cols", one_based(m.cols)}, {"value", big(m.value)}};
}

// ---------------------------------------------------------------------------

Outcome cmd_check(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource src = read_matrix_source(opt.source);
  fingerprint_data += src.canonical;
  Outcome o;
  try {
    const UnimodularSystem sys = to_system(src);
    o.result["unimodular"] = true;
    o.result["system"] = system_json(sys);
    o.text = "unimodular: " + std::to_string(sys.size()) + " forms, dimension " + std::to_string(sys.dimension()) +
             "\nbase rows: " + join(one_based(sys.base_rows())) + "\nstandard form:\n" + format_system(sys);
  } catch (const NotUnimodularError& e) {
    o.code = kVerificationFailed;
    o.result["unimodular"] = false;
    o.result["reason"] = e.what();
    o.text = std::string("not unimodular: ") + e.what() + "\n";
    if (e.witness()) {
      o.result["witness"] = minor_json(*e.witness());
      o.text += "witness minor: " + minor_text(*e.witness()) + "\n";
    }
  }
  return o;
}

Outcome cmd_complexity(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource src = read_matrix_source(opt.source);
  fingerprint_data += src.canonical;
  const UnimodularSystem sys = to_system(src);
  const Integer c = complexity(sys);
  Outcome o;
  o.result["complexity"] = big(c);
  o.text = c.get_str() + "\n";
  if (opt.enumerate) {
    const std::size_t bases = enumerate_bases(sys, opt.limits).size();
    const bool equal = Integer(static_cast<unsigned long>(bases)) == c;
    o.result["bases"] = bases;
    o.result["equal"] = equal;
    o.text += "bases " + std::to_string(bases) + "\nequal " + (equal ? "yes" : "no") + "\n";
    if (!equal) o.code = kVerificationFailed;
  }
  return o;
}

Outcome cmd_dual(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource src = read_matrix_source(opt.source);
  fingerprint_data += src.canonical;
  const UnimodularSystem dual = gale_dual(to_system(src));
  Outcome o;
  o.result["dual"] = system_json(dual);
  o.result["source_rows"] = one_based(gale_dual_rows(to_system(src)));
  const std::string body = format_system(dual);
  if (!opt.output.empty()) {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + opt.output + "'");
    file << body;
    o.result["written"] = opt.output;
    o.text = "wrote " + opt.output + "\n";
  } else {
    o.text = body;
  }
  return o;
}

Outcome cmd_decompose(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource src = read_matrix_source(opt.source);
  fingerprint_data += src.canonical;
  const UpsilonSplit split = split_upsilon(to_system(src));
  Outcome o;
  o.result["upsilon_count"] = split.count;
  o.result["upsilon_rows"] = one_based(split.upsilon_rows);
  o.result["core_rows"] = one_based(split.core_rows);
  o.result["core"] = system_json(split.core);
  o.text = "upsilon summands " + std::to_string(split.count);
  if (split.count) o.text += " (rows " + join(one_based(split.upsilon_rows)) + ")";
  o.text += "\ncore: " + std::to_string(split.core.size()) + " forms, dimension " +
            std::to_string(split.core.dimension()) + "\n";
  if (!split.core.is_empty()) o.text += format_system(split.core);
  return o;
}

Outcome cmd_isomorphic(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource a = read_matrix_source(opt.source);
  const MatrixSource b = read_matrix_source(opt.second);
  fingerprint_data += a.canonical + '\0' + b.canonical;
  const auto corr = are_isomorphic(to_system(a), to_system(b), opt.limits);
  Outcome o;
  o.result["isomorphic"] = corr.has_value();
  if (!corr) {
    o.code = kVerificationFailed;
    o.text = "not isomorphic\n";
    return o;
  }
  o.result["permutation"] = one_based(corr->permutation);
  o.result["signs"] = corr->signs;
  o.result["base_change"] = matrix_json(corr->base_change);
  std::ostringstream os;
  os << "isomorphic\npermutation: " << join(one_based(corr->permutation)) << "\nsigns:";
  for (int s : corr->signs) os << (s > 0 ? " +" : " -");
  os << "\nbase change:\n" << format_matrix(corr->base_change);
  o.text = os.str();
  return o;
}

Outcome cmd_aut(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource src = read_matrix_source(opt.source);
  fingerprint_data += src.canonical;
  const Integer count = automorphism_count(to_system(src), opt.limits);
  Outcome o;
  o.result["automorphisms"] = big(count);
  o.text = count.get_str() + "\n";
  return o;
}

const char* minimum_kind(MinimumSquare::Kind kind) {
  switch (kind) {
    case MinimumSquare::Kind::Exact: return "exact";
    case MinimumSquare::Kind::AtLeastFourAttained: return "at least 4, attained";
    case MinimumSquare::Kind::AtLeastFour: return "at least 4";
    case MinimumSquare::Kind::None: return "none";
  }
  return "";
}

Outcome cmd_lattice(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource src = read_matrix_source(opt.source);
  fingerprint_data += src.canonical;
  const UnimodularSystem sys = to_system(src);
  const LatticeModel lat = lattice_of(sys);
  const Integer disc = discriminant(lat);
  const ShortVectorCensus census = short_vector_census(sys, opt.limits);
  Outcome o;
  o.result["gram"] = matrix_json(lat.gram);
  o.result["discriminant"] = big(disc);
  json counts = json::object();
  for (const auto& [square, count] : census.counts) counts[std::to_string(square)] = count;
  o.result["census"] = counts;
  o.result["minimum"] = {{"value", census.minimum.value}, {"kind", minimum_kind(census.minimum.kind)}};
  std::ostringstream os;
  os << "gram:\n" << format_matrix(lat.gram) << "discriminant " << disc << "\nvectors by square:\n";
  for (const auto& [square, count] : census.counts) os << "  " << square << ": " << count << '\n';
  os << "minimum " << census.minimum.value << " (" << minimum_kind(census.minimum.kind) << ")\n";
  o.text = os.str();
  return o;
}

Outcome cmd_polytope(const Options& opt, std::string& fingerprint_data) {
  const MatrixSource src = read_matrix_source(opt.source);
  fingerprint_data += src.canonical;
  const UnimodularSystem sys = to_system(src);
  const PolytopeReport report = polytope_report(sys, opt.limits);
  Outcome o;
  o.result = json::parse(polytope_report_json(sys, report));
  o.text = polytope_report_text(sys, report);
  return o;
}

Outcome cmd_graph(const Options& opt, std::string& fingerprint_data) {
  if (opt.graphic == opt.cographic) throw UsageError("graph needs exactly one of --graphic or --cographic");
  GraphSource src = read_graph_source(opt.source);
  fingerprint_data += src.canonical;
  if (opt.stabilize) src.graph = stabilize(src.graph);
  const UnimodularSystem sys = opt.graphic ? graphic_system(src.graph) : cographic_system(src.graph);
  Outcome o;
  o.result["kind"] = opt.graphic ? "graphic" : "cographic";
  o.result["stabilized"] = opt.stabilize;
  o.result["system"] = system_json(sys);
  o.text = format_system(sys);
  return o;
}

Outcome cmd_catalog(const Options& opt) {
  if (!opt.list) throw UsageError("catalog needs --list");
  Outcome o;
  json entries = json::array();
  std::ostringstream os;
  for (const auto& e : catalog_entries()) {
    const char* kind = e.kind == EntryKind::Graph ? "graph" : e.kind == EntryKind::Matrix ? "matrix" : "system";
    json entry = {{"name", e.name}, {"kind", kind}, {"description", e.description}};
    std::string usage = "catalog:" + e.name;
    if (e.parametric()) {
      entry["param"] = {{"name", e.param}, {"min", e.min_param}, {"max", e.max_param}};
      usage += ":<" + e.param + ">";
    }
    entries.push_back(entry);
    os << std::left << std::setw(28) << usage << std::setw(8) << kind << e.description << '\n';
  }
  o.result["entries"] = entries;
  o.text = os.str();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unimodular systems: verification, duality, lattices and polytopes", "unimod"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_option("--cap", opt.limits.enumeration_cap, "Largest N for base, isomorphism and automorphism enumeration")
      ->capture_default_str();
  app.add_option("--scan-cap", opt.limits.scan_cap, "Largest N for the 3^N lattice point scan")->capture_default_str();
  app.add_option("--projection-cap", opt.limits.projection_cap, "Largest cube dimension for projections")
      ->capture_default_str();
  app.add_option("--threads", opt.limits.threads, "Worker threads for scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Verify a matrix and print its standard form");
  check->add_option("src", opt.source, "Matrix file or catalog:<name>[:<param>]")->required();
  auto* complexity_cmd = app.add_subcommand("complexity", "Number of bases, as det(A^T A)");
  complexity_cmd->add_option("src", opt.source)->required();
  complexity_cmd->add_flag("--enumerate", opt.enumerate, "Also count bases directly and compare");
  auto* dual = app.add_subcommand("dual", "Gale dual in matrix format");
  dual->add_option("src", opt.source)->required();
  dual->add_option("-o,--output", opt.output, "Write the dual to a file");
  auto* decompose = app.add_subcommand("decompose", "Split off Upsilon summands");
  decompose->add_option("src", opt.source)->required();
  auto* isomorphic = app.add_subcommand("isomorphic", "Search for a signed correspondence");
  isomorphic->add_option("a", opt.source)->required();
  isomorphic->add_option("b", opt.second)->required();
  auto* aut = app.add_subcommand("aut", "Count automorphisms");
  aut->add_option("src", opt.source)->required();
  auto* lattice = app.add_subcommand("lattice", "Gram matrix, discriminant and short vectors");
  lattice->add_option("src", opt.source)->required();
  auto* polytope = app.add_subcommand("polytope", "Lattice points, vertices, facets and verdicts of the polytope");
  polytope->add_option("src", opt.source)->required();
  auto* graph = app.add_subcommand("graph", "Graphic or cographic system of an edge list");
  graph->add_option("edges", opt.source, "Edge list file or catalog:<graph>[:<param>]")->required();
  graph->add_flag("--graphic", opt.graphic);
  graph->add_flag("--cographic", opt.cographic);
  graph->add_flag("--stabilize", opt.stabilize, "Contract bridges and delete loops first");
  auto* catalog = app.add_subcommand("catalog", "Catalog entries");
  catalog->add_flag("--list", opt.list);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  std::string fingerprint_data;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (chosen == check) outcome = cmd_check(opt, fingerprint_data);
    else if (chosen == complexity_cmd) outcome = cmd_complexity(opt, fingerprint_data);
    else if (chosen == dual) outcome = cmd_dual(opt, fingerprint_data);
    else if (chosen == decompose) outcome = cmd_decompose(opt, fingerprint_data);
    else if (chosen == isomorphic) outcome = cmd_isomorphic(opt, fingerprint_data);
    else if (chosen == aut) outcome = cmd_aut(opt, fingerprint_data);
    else if (chosen == lattice) outcome = cmd_lattice(opt, fingerprint_data);
    else if (chosen == polytope) outcome = cmd_polytope(opt, fingerprint_data);
    else if (chosen == graph) outcome = cmd_graph(opt, fingerprint_data);
    else outcome = cmd_catalog(opt);
  } catch (const CapError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const NotUnimodularError& e) {
    err << "not unimodular: " << e.what() << '\n';
    if (e.witness()) err << "witness minor: " << minor_text(*e.witness()) << '\n';
    return kVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.json) {
    json report;
    report["schema"] = "unimod/1";
    report["command"] = args;
    report["input_sha256"] = sha256_hex(fingerprint_data);
    report["result"] = outcome.result;
    report["timing_ms"] = elapsed;
    out << report.dump(2) << '\n';
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace unimod::cli
