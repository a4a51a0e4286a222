#include <random>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"
#include "unimod/catalog.hpp"
#include "unimod/isomorphism.hpp"
#include "unimod/linalg.hpp"
#include "unimod/system.hpp"

namespace unimod {
namespace {

UnimodularSystem triangle3() { return make_system("triangle3"); }

TEST(FromMatrix, AcceptsTotallyUnimodularInput) {
  const UnimodularSystem sys = from_matrix(IntMatrix{{1, 0}, {0, 1}, {1, -1}});
  EXPECT_EQ(sys.size(), 3u);
  EXPECT_EQ(sys.dimension(), 2u);
  EXPECT_EQ(sys.matrix(), (IntMatrix{{1, 0}, {0, 1}, {1, -1}}));
  EXPECT_EQ(sys.base_rows(), (std::vector<std::size_t>{0, 1}));
}

TEST(FromMatrix, RejectsWithWitness) {
  try {
    from_matrix(IntMatrix{{1, 0}, {0, 1}, {1, 1}, {1, -1}});
    FAIL() << "expected NotUnimodularError";
  } catch (const NotUnimodularError& e) {
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->rows, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(e.witness()->value, -2);
  }
}

TEST(FromMatrix, IndexTwoBaseIsRejected) {
  // Rows 1, 2 generate a subgroup of index 2 in the group of all three rows.
  try {
    from_matrix(IntMatrix{{1, 1}, {1, -1}, {1, 0}});
    FAIL() << "expected NotUnimodularError";
  } catch (const NotUnimodularError& e) {
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->rows, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(abs(e.witness()->value), 2);
  }
}

TEST(FromMatrix, RescalesToTheGeneratedGroup) {
  const UnimodularSystem sys = from_matrix(IntMatrix{{2}});
  EXPECT_EQ(sys, upsilon(1));
  EXPECT_EQ(from_matrix(make_matrix("bixby_seymour_raw")), make_system("bixby_seymour"));
}

TEST(FromMatrix, InputErrors) {
  EXPECT_THROW(from_matrix(IntMatrix(0, 0)), DimensionError);
  EXPECT_THROW(from_matrix(IntMatrix{{1, 0}, {0, 0}}), DegenerateSystemError);
  EXPECT_THROW(from_matrix(IntMatrix{{1, 1}, {2, 2}}), RankError);
  EXPECT_THROW(from_matrix(IntMatrix{{1}}, {"a", "b"}), DimensionError);
}

TEST(FromMatrix, KeepsLabelsAndOrientation) {
  const UnimodularSystem sys = from_matrix(IntMatrix{{-1}, {1}}, {"x", "y"});
  EXPECT_EQ(sys.label(0), "x");
  EXPECT_EQ(sys.matrix(), (IntMatrix{{1}, {-1}}));
  EXPECT_EQ(from_matrix(IntMatrix{{1}}).label(0), "1");
}

TEST(FromMatrix, DisguisedSystemsAreRecovered) {
  std::mt19937 rng(21);
  for (const auto& inst : support::catalog_systems(10)) {
    const IntMatrix raw = gen::disguise(rng, inst.sys);
    const UnimodularSystem sys = from_matrix(raw);
    EXPECT_TRUE(oracle::totally_unimodular(sys.matrix())) << inst.name;
    const auto corr = are_isomorphic(inst.sys, sys);
    ASSERT_TRUE(corr) << inst.name;
    EXPECT_TRUE(is_correspondence(inst.sys, sys, *corr)) << inst.name;
  }
}

TEST(Complexity, Examples) {
  for (long n = 1; n <= 8; ++n) EXPECT_EQ(complexity(make_system("sigma", n)), n);
  EXPECT_EQ(complexity(make_system("pair2")), 1);
  EXPECT_EQ(complexity(triangle3()), 3);
  EXPECT_EQ(complexity(make_system("bixby_seymour")), 162);
  EXPECT_EQ(complexity(UnimodularSystem{}), 1);
}

TEST(Complexity, EqualsBaseCount) {
  for (const auto& inst : support::catalog_systems(12)) {
    const auto bases = enumerate_bases(inst.sys);
    EXPECT_EQ(complexity(inst.sys), static_cast<unsigned long>(bases.size())) << inst.name;
    EXPECT_EQ(bases.size(), oracle::base_count(inst.sys.matrix())) << inst.name;
  }
}

TEST(EnumerateBases, TriangleAndCap) {
  EXPECT_EQ(enumerate_bases(triangle3()),
            (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
  Limits tight;
  tight.enumeration_cap = 2;
  EXPECT_THROW(enumerate_bases(triangle3(), tight), CapError);
}

TEST(DirectSum, BlockDiagonal) {
  const UnimodularSystem sum = direct_sum(upsilon(1), triangle3());
  EXPECT_EQ(sum.matrix(), (IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(complexity(sum), 3);
}

TEST(DirectSum, ComplexityIsMultiplicative) {
  const auto systems = support::catalog_systems(5);
  for (std::size_t i = 0; i < systems.size(); i += 3)
    for (std::size_t j = 0; j < systems.size(); j += 4)
      EXPECT_EQ(complexity(direct_sum(systems[i].sys, systems[j].sys)),
                complexity(systems[i].sys) * complexity(systems[j].sys));
}

TEST(SplitUpsilon, Examples) {
  const UpsilonSplit none = split_upsilon(triangle3());
  EXPECT_EQ(none.count, 0u);
  EXPECT_EQ(none.core, triangle3());

  const UpsilonSplit two = split_upsilon(direct_sum(direct_sum(upsilon(1), triangle3()), upsilon(1)));
  EXPECT_EQ(two.count, 2u);
  EXPECT_EQ(two.upsilon_rows, (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(two.core_rows, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(two.core, triangle3());

  const UpsilonSplit all = split_upsilon(upsilon(3));
  EXPECT_EQ(all.count, 3u);
  EXPECT_TRUE(all.core.is_empty());
}

TEST(GaleDual, SigmaTwo) {
  const UnimodularSystem dual = gale_dual(make_system("sigma", 2));
  EXPECT_EQ(dual.matrix(), (IntMatrix{{1}, {-1}}));
  EXPECT_TRUE(are_isomorphic(dual, make_system("sigma", 2)));
}

TEST(GaleDual, UpsilonHasEmptyDual) {
  EXPECT_TRUE(gale_dual(upsilon(3)).is_empty());
  EXPECT_TRUE(gale_dual_rows(upsilon(2)).empty());
}

TEST(GaleDual, DropsUpsilonRows) {
  const UnimodularSystem sys = direct_sum(upsilon(1), triangle3());
  EXPECT_EQ(gale_dual_rows(sys), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(gale_dual(sys).size(), 3u);
}

TEST(GaleDual, Invariants) {
  for (const auto& inst : support::catalog_systems(12)) {
    const UnimodularSystem dual = gale_dual(inst.sys);
    const UpsilonSplit split = split_upsilon(inst.sys);
    if (dual.is_empty()) {
      EXPECT_TRUE(split.core.is_empty()) << inst.name;
      continue;
    }
    EXPECT_EQ(complexity(dual), complexity(inst.sys)) << inst.name;
    EXPECT_EQ(split_upsilon(dual).count, 0u) << inst.name;
    EXPECT_EQ(dual.dimension() + split.core.dimension(), split.core.size()) << inst.name;
    EXPECT_TRUE(are_isomorphic(gale_dual(dual), split.core)) << inst.name;
  }
}

TEST(GaleDual, ComplementaryBases) {
  for (const auto& inst : support::catalog_systems(12)) {
    const UnimodularSystem core = split_upsilon(inst.sys).core;
    if (core.is_empty()) continue;
    const UnimodularSystem dual = gale_dual(core);
    ASSERT_EQ(dual.size(), core.size()) << inst.name;
    std::set<std::vector<std::size_t>> dual_bases;
    for (auto b : enumerate_bases(dual)) dual_bases.insert(b);
    const auto bases = enumerate_bases(core);
    EXPECT_EQ(bases.size(), dual_bases.size()) << inst.name;
    for (const auto& b : bases) {
      std::vector<std::size_t> complement;
      for (std::size_t r = 0; r < core.size(); ++r)
        if (!std::binary_search(b.begin(), b.end(), r)) complement.push_back(r);
      EXPECT_TRUE(dual_bases.count(complement)) << inst.name;
    }
  }
}

TEST(MultiplicityClasses, Examples) {
  EXPECT_EQ(multiplicity_classes(make_system("sigma", 4)), (std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}}));
  EXPECT_EQ(multiplicity_classes(make_system("bixby_seymour")).size(), 10u);
  EXPECT_EQ(multiplicity_classes(triangle3()).size(), 3u);
  EXPECT_EQ(multiplicity_classes(from_matrix(IntMatrix{{1, 0}, {0, 1}, {-1, 0}, {1, 1}})),
            (std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3}}));
}

TEST(UnimodularSystem, StandardFormInvariants) {
  for (const auto& inst : support::catalog_systems(12)) {
    const auto& sys = inst.sys;
    EXPECT_EQ(sys.matrix().select_rows(sys.base_rows()), IntMatrix::identity(sys.dimension())) << inst.name;
    EXPECT_TRUE(is_totally_unimodular(sys.matrix())) << inst.name;
    EXPECT_EQ(sys.base_rows().size() + sys.non_base_rows().size(), sys.size());
    EXPECT_EQ(sys.reduced_block().rows(), sys.non_base_rows().size());
  }
}

}  // namespace
}  // namespace unimod
