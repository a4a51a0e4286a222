#include <random>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "unimod/catalog.hpp"
#include "unimod/graph.hpp"
#include "unimod/isomorphism.hpp"
#include "unimod/lattice.hpp"
#include "unimod/linalg.hpp"

namespace unimod {
namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Theta_3 with a pendant vertex 2 hanging off vertex 1.
Multigraph theta_with_pendant() { return Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 1}}); }

TEST(Multigraph, RejectsUnknownVertex) { EXPECT_THROW(Multigraph(2, {{0, 2}}), DimensionError); }

TEST(Incidence, Triangle) {
  EXPECT_EQ(incidence_matrix(triangle()), (IntMatrix{{-1, 1, 0}, {0, -1, 1}, {-1, 0, 1}}));
}

TEST(Incidence, LoopRowIsZero) {
  EXPECT_EQ(incidence_matrix(Multigraph(2, {{0, 1}, {1, 1}})), (IntMatrix{{-1, 1}, {0, 0}}));
}

TEST(Incidence, RankOfConnectedGraph) {
  EXPECT_EQ(rank(incidence_matrix(make_graph("complete", 4))), 3u);
  EXPECT_EQ(rank(incidence_matrix(make_graph("theta", 5))), 1u);
}

TEST(Bridges, PendantEdge) {
  EXPECT_EQ(bridges(theta_with_pendant()), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(bridges(make_graph("complete", 4)).empty());
  EXPECT_EQ(bridges(make_graph("path", 4)).size(), 3u);
  EXPECT_THROW(bridges(Multigraph(3, {{0, 1}})), ConnectivityError);
}

TEST(Loops, Detected) { EXPECT_EQ(loops(Multigraph(2, {{0, 1}, {1, 1}, {0, 0}})), (std::vector<std::size_t>{1, 2})); }

TEST(Stabilize, ContractsBridgesDeletesLoops) {
  EXPECT_EQ(stabilize(theta_with_pendant()), make_graph("theta", 3));
  const Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 3}});
  const Multigraph s = stabilize(g);
  EXPECT_EQ(s.vertex_count(), 3u);
  EXPECT_EQ(s.edge_count(), 3u);
  EXPECT_TRUE(bridges(s).empty());
  EXPECT_TRUE(loops(s).empty());
}

TEST(Stabilize, ChainOfBridges) {
  const Multigraph s = stabilize(make_graph("path", 4));
  EXPECT_EQ(s.vertex_count(), 1u);
  EXPECT_EQ(s.edge_count(), 0u);
}

TEST(SpanningTrees, CountsAndCap) {
  EXPECT_EQ(spanning_trees(triangle()).size(), 3u);
  EXPECT_EQ(spanning_trees(make_graph("complete", 4)).size(), 16u);
  EXPECT_EQ(spanning_trees(make_graph("theta", 4)).size(), 4u);
  Limits tight;
  tight.enumeration_cap = 5;
  EXPECT_THROW(spanning_trees(make_graph("complete", 4), tight), CapError);
  EXPECT_EQ(first_spanning_tree(make_graph("complete", 4)), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(GraphSystems, Dimensions) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = gen::uniform(rng, 2, 6);
    const Multigraph g = gen::connected_graph(rng, m, gen::uniform(rng, 1, 5), true);
    const std::size_t N = g.edge_count();
    const std::size_t cut = bridges(g).size();
    const std::size_t self = loops(g).size();
    try {
      const UnimodularSystem graphic = graphic_system(g);
      EXPECT_EQ(graphic.dimension(), N - m + 1);
      EXPECT_EQ(graphic.size(), N - cut);
      EXPECT_EQ(split_upsilon(graphic).count, self);
    } catch (const DegenerateSystemError&) {
      EXPECT_EQ(N, m - 1);
    }
    const UnimodularSystem cographic = cographic_system(g);
    EXPECT_EQ(cographic.dimension(), m - 1);
    EXPECT_EQ(cographic.size(), N - self);
    EXPECT_EQ(split_upsilon(cographic).count, cut);
  }
}

TEST(GraphSystems, ClassicalIdentifications) {
  for (long n = 2; n <= 6; ++n) {
    EXPECT_TRUE(are_isomorphic(cographic_system(make_graph("theta", n)), make_system("sigma", n)));
    if (n >= 3) EXPECT_TRUE(are_isomorphic(graphic_system(make_graph("cycle", n)), make_system("sigma", n)));
  }
  EXPECT_TRUE(are_isomorphic(graphic_system(make_graph("theta", 3)), make_system("triangle3")));
  EXPECT_TRUE(are_isomorphic(cographic_system(triangle()), make_system("triangle3")));
  EXPECT_EQ(graphic_system(Multigraph(1, {{0, 0}, {0, 0}})), make_system("pair2"));
  EXPECT_EQ(cographic_system(make_graph("path", 3)), upsilon(2));
}

TEST(GraphSystems, ThetaGraphicMatrix) {
  const UnimodularSystem sys = graphic_system(make_graph("theta", 4));
  EXPECT_EQ(sys.matrix(), (IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
  EXPECT_EQ(sys.labels(), (std::vector<std::string>{"e1", "e2", "e3", "e4"}));
}

TEST(GraphSystems, FundamentalCycleFollowsChord) {
  // The tree is {0 -> 1, 0 -> 2}; the chord 1 -> 2 returns along 2 -> 0 -> 1.
  const UnimodularSystem sys = graphic_system(Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(sys.matrix(), (IntMatrix{{1}, {1}, {-1}}));
}

TEST(GraphSystems, Failures) {
  EXPECT_THROW(graphic_system(make_graph("path", 3)), DegenerateSystemError);
  EXPECT_THROW(cographic_system(Multigraph(1, {{0, 0}})), DegenerateSystemError);
  EXPECT_THROW(graphic_system(Multigraph(3, {{0, 1}})), ConnectivityError);
}

TEST(GraphSystems, CographicCompleteGram) {
  for (long n = 3; n <= 6; ++n) {
    const LatticeModel lat = lattice_of(cographic_system(make_graph("complete", n)));
    for (long i = 0; i < n - 1; ++i)
      for (long j = 0; j < n - 1; ++j) EXPECT_EQ(lat.gram(i, j), i == j ? n - 1 : -1);
  }
}

TEST(Kirchhoff, CutBasisGramIsReducedLaplacian) {
  for (const Multigraph& g : {triangle(), make_graph("theta", 4), make_graph("complete", 4), make_graph("complete", 5)}) {
    const IntMatrix incidence = incidence_matrix(g);
    std::vector<std::size_t> rest;
    for (std::size_t v = 1; v < g.vertex_count(); ++v) rest.push_back(v);
    const IntMatrix cuts = incidence.select_cols(rest);
    EXPECT_EQ(cuts.transpose() * cuts, reduced_laplacian(g));
    EXPECT_EQ(determinant(reduced_laplacian(g)), static_cast<unsigned long>(spanning_trees(g).size()));
    EXPECT_EQ(complexity(cographic_system(g)), static_cast<unsigned long>(spanning_trees(g).size()));
  }
}

TEST(Kirchhoff, RandomGraphs) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const Multigraph g = gen::connected_graph(rng, gen::uniform(rng, 2, 6), gen::uniform(rng, 0, 6), true);
    const auto trees = spanning_trees(g).size();
    EXPECT_EQ(determinant(reduced_laplacian(g, gen::uniform(rng, 0, g.vertex_count() - 1))),
              static_cast<unsigned long>(trees));
    EXPECT_EQ(complexity(cographic_system(g)), static_cast<unsigned long>(trees));
  }
}

TEST(Cayley, CompleteGraphs) {
  EXPECT_EQ(complexity(cographic_system(make_graph("complete", 3))), 3);
  EXPECT_EQ(complexity(cographic_system(make_graph("complete", 4))), 16);
  EXPECT_EQ(complexity(cographic_system(make_graph("complete", 5))), 125);
  EXPECT_EQ(complexity(cographic_system(make_graph("complete", 7))), 16807);
}

TEST(GaleDuality, GraphicAndCographic) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const Multigraph g = stabilize(gen::connected_graph(rng, gen::uniform(rng, 2, 5), gen::uniform(rng, 2, 5), true));
    if (g.edge_count() == 0 || g.vertex_count() < 2) continue;
    UnimodularSystem graphic;
    try {
      graphic = graphic_system(g);
    } catch (const DegenerateSystemError&) {
      continue;
    }
    const UnimodularSystem cographic = cographic_system(g);
    EXPECT_TRUE(are_isomorphic(gale_dual(graphic), cographic));
    EXPECT_TRUE(are_isomorphic(gale_dual(cographic), graphic));
    EXPECT_EQ(complexity(graphic), complexity(cographic));
  }
}

}  // namespace
}  // namespace unimod
