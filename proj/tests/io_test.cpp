#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "unimod/catalog.hpp"
#include "unimod/io.hpp"

namespace unimod {
namespace {

TEST(MatrixText, ParsesCommentsAndLabels) {
  const MatrixFile f = parse_matrix(
      "# triangle\n"
      "3 2\n"
      "# labels: a b c\n"
      "1 0\n"
      "\n"
      "0 1\n"
      "  1   1  \n");
  EXPECT_EQ(f.matrix, (IntMatrix{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(f.labels, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(MatrixText, RoundTrip) {
  const UnimodularSystem sys = make_system("bixby_seymour");
  const MatrixFile f = parse_matrix(format_system(sys));
  EXPECT_EQ(f.matrix, sys.matrix());
  const std::vector<std::string> labels{"x1", "x2", "x3"};
  const MatrixFile g = parse_matrix(format_matrix(IntMatrix{{1, 0}, {0, 1}, {1, 1}}, labels));
  EXPECT_EQ(g.labels, labels);
}

TEST(MatrixText, BigEntries) {
  const MatrixFile f = parse_matrix("1 1\n-123456789012345678901234567890\n");
  EXPECT_EQ(f.matrix(0, 0), Integer("-123456789012345678901234567890"));
}

TEST(MatrixText, Errors) {
  EXPECT_THROW(parse_matrix(""), ParseError);
  EXPECT_THROW(parse_matrix("2 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 2\n1\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 1\nx\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 1\n1.5\n"), ParseError);
  EXPECT_THROW(parse_matrix("two 1\n1\n"), ParseError);
  EXPECT_THROW(parse_matrix("2 1\n# labels: a\n1\n1\n"), ParseError);
}

TEST(MatrixJson, ParsesNumbersAndStrings) {
  const MatrixFile f = parse_matrix(R"({"rows": [[1, "0"], [0, 1], ["99999999999999999999", -1]], "labels": ["a", "b", "c"]})");
  EXPECT_EQ(f.matrix(2, 0), Integer("99999999999999999999"));
  EXPECT_EQ(f.matrix(2, 1), -1);
  EXPECT_EQ(f.labels.size(), 3u);
}

TEST(MatrixJson, Errors) {
  EXPECT_THROW(parse_matrix("{"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"cols": []})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": []})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": [[1, 2], [1]]})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": [[1.5]]})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": [[1]], "labels": ["a", "b"]})"), ParseError);
}

TEST(EdgeList, ParsesOneBasedVertices) {
  const Multigraph g = parse_edge_list("# triangle\n3 3\n1 2\n2 3\n1 3\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("2 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 1\n1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 1\n1 3\n"), DimensionError);
  EXPECT_THROW(parse_edge_list("2 1\n0 1\n"), DimensionError);
}

TEST(PolytopeReportFormats, JsonFields) {
  const UnimodularSystem sys = make_system("bixby_seymour");
  const PolytopeReport report = polytope_report(sys);
  const auto json = nlohmann::json::parse(polytope_report_json(sys, report));
  EXPECT_EQ(json["census"], nlohmann::json({{"4", 30}, {"6", 30}, {"10", 12}}));
  EXPECT_EQ(json["vertices"], 12);
  EXPECT_EQ(json["facets"], 20);
  EXPECT_EQ(json["points"].size(), 73u);
  EXPECT_EQ(json["origin"], true);
  EXPECT_EQ(json["reflexive"], true);
  EXPECT_EQ(json["facet_table"][0]["rows"], nlohmann::json({1}));
}

TEST(PolytopeReportFormats, TextIsDeterministic) {
  const UnimodularSystem sys = make_system("triangle3");
  const std::string text = polytope_report_text(sys, polytope_report(sys));
  EXPECT_EQ(text, polytope_report_text(sys, polytope_report(sys)));
  EXPECT_NE(text.find("vertices 6"), std::string::npos);
  EXPECT_NE(text.find("facets 6"), std::string::npos);
}

}  // namespace
}  // namespace unimod
